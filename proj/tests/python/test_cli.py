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

import csv
import io
import json


def test_scale(cli, data_dir):
    out = json.loads(cli("scale", "--config", data_dir / "running_example.json",
                         "--epsilon", 1, "--query", "state_frequency(1)").stdout)
    assert abs(out["sigma_max"] - 13.021923) < 1e-6
    group = json.loads(cli("scale", "--config", data_dir / "running_example.json",
                           "--epsilon", 1, "--mechanism", "group_dp",
                           "--query", "state_frequency(1)").stdout)
    assert group["laplace_scale"] == 1.0
    fast = json.loads(cli("scale", "--config", data_dir / "mixing_params.json",
                          "--epsilon", 1, "--mechanism", "mqm_approx_fast",
                          "--query", "state_frequency(1)").stdout)
    assert fast["a_star"] == 12
    w = json.loads(cli("scale", "--config", data_dir / "flu.json", "--epsilon", 1,
                       "--mechanism", "wasserstein", "--query", "value_sum").stdout)
    assert w["wasserstein_w"] == 2.0


def test_scale_stable_across_threads(cli, data_dir):
    runs = [cli("scale", "--config", data_dir / "running_example.json", "--epsilon", 1,
                "--threads", n).stdout for n in (1, 2, 4)]
    assert runs[0] == runs[1] == runs[2]


def test_privatize_reproducible(cli, data_dir):
    args = ("privatize", "--config", data_dir / "running_example.json",
            "--data", data_dir / "states.json", "--epsilon", 1, "--seed", 42)
    first = cli(*args).stdout
    assert first == cli(*args).stdout
    assert json.loads(first)["seed"] == 42


def test_privatize_errors(cli, data_dir):
    base = ("privatize", "--config", data_dir / "running_example.json",
            "--data", data_dir / "states.json")
    proc = cli(*base, "--epsilon", "inf", "--seed", 1, check=False)
    assert proc.returncode != 0
    assert "error:" in proc.stderr
    assert cli(*base, "--epsilon", 1, check=False).returncode != 0


def test_privatize_labels(cli, data_dir):
    out = json.loads(cli("privatize", "--config", data_dir / "activity_class.json",
                         "--data", data_dir / "activity.csv", "--value-col", "activity",
                         "--labels", "sit,stand,walk,run", "--query", "count_histogram",
                         "--epsilon", 1, "--seed", 3).stdout)
    assert len(out["answer"]) == 4


def test_estimate(cli, tmp_path):
    small = tmp_path / "small.csv"
    small.write_text("timestamp,value\n0,1\n60,1\n120,1\n180,2\n")
    est = json.loads(cli("estimate", "--data", small, "--width", 1, "--origin", 1).stdout)
    assert est["k"] == 2
    assert est["chains"][0]["P"][0] == [0.6, 0.4]
    assert est["chains"][0]["P"][1] == [0.5, 0.5]

    power = tmp_path / "power.csv"
    rows = ["timestamp,value"] + [f"{60 * i},{(i * 37) % 10500}" for i in range(300)]
    power.write_text("\n".join(rows) + "\n")
    est = json.loads(cli("estimate", "--data", power, "--width", 200,
                         "--states", 51).stdout)
    assert est["k"] == 51
    assert len(est["chains"][0]["P"]) == 51

    empty = tmp_path / "empty.csv"
    empty.write_text("")
    proc = cli("estimate", "--data", empty, check=False)
    assert proc.returncode != 0
    assert "error:" in proc.stderr


def test_compose(cli, data_dir, tmp_path):
    ledger = tmp_path / "ledger.jsonl"
    args = ("compose", "--config", data_dir / "running_example.json",
            "--ledger", ledger, "--query", "state_frequency(1)")
    totals = [json.loads(cli(*args, "--epsilon", 1).stdout)["total_epsilon"]
              for _ in range(3)]
    assert totals == [1, 2, 3]

    mixed = tmp_path / "mixed.jsonl"
    margs = ("compose", "--config", data_dir / "running_example.json",
             "--ledger", mixed, "--query", "state_frequency(1)")
    cli(*margs, "--epsilon", 0.5)
    out = json.loads(cli(*margs, "--epsilon", 2).stdout)
    assert out["entries"] == 2
    assert out["total_epsilon"] == 4

    lines = ledger.read_text().splitlines()
    entry = json.loads(lines[1])
    entry["epsilon"] = 0.1
    lines[1] = json.dumps(entry)
    ledger.write_text("\n".join(lines) + "\n")
    proc = cli(*args, "--epsilon", 1, check=False)
    assert proc.returncode != 0


def test_bench(cli):
    args = ("bench", "--seed", 7, "--trials", 3, "--alphas", "0.2,0.3",
            "--epsilons", 1, "--mechanisms", "mqm_exact,group_dp",
            "--length", 20, "--grid-step", 0.1)
    first = cli(*args).stdout
    assert first == cli(*args).stdout
    rows = list(csv.DictReader(io.StringIO(first)))
    assert len(rows) == 4
    assert set(rows[0]) == {"alpha", "epsilon", "mechanism", "mean_L1_error"}
    verbose = list(csv.DictReader(io.StringIO(cli(*args, "--verbose").stdout)))
    assert len(verbose) == 12
    assert cli("bench", "--trials", 3, check=False).returncode != 0
