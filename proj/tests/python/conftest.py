# Copyright 2026 The Pufferfish Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess

import pytest

DATA = pathlib.Path(
    os.environ.get("PUFFERFISH_EXAMPLES", pathlib.Path(__file__).parent.parent / "data"))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def cli():
    exe = os.environ.get("PUFFERFISH_CLI")
    if not exe:
        pytest.skip("PUFFERFISH_CLI not set")

    def run(*args, check=True):
        proc = subprocess.run([exe, *map(str, args)], capture_output=True, text=True)
        if check and proc.returncode != 0:
            raise AssertionError(f"{args}: rc={proc.returncode} {proc.stderr}")
        return proc

    return run


@pytest.fixture
def running_example():
    return json.loads((DATA / "running_example.json").read_text())
