# Copyright 2026 The addesign Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Runs the addesign binary named by $ADDESIGN_CLI.

import json
import os
import subprocess

import pytest

CLI = os.environ.get("ADDESIGN_CLI", "addesign")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_help_documents_exit_codes():
    res = run("--help")
    assert res.returncode == 0
    assert "Exit status" in res.stdout


def test_gen_dev_and_pg(tmp_path):
    res = run("gen", "dev", "--v", "13", "--set", "0,1,3,9")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert (doc["v"], doc["k"], doc["lambda"], len(doc["blocks"])) == (13, 4, 1, 13)
    doc = json.loads(run("gen", "pg", "--n", "3", "--q", "3", "--d", "1").stdout)
    assert (doc["v"], doc["k"], doc["lambda"], len(doc["blocks"])) == (40, 4, 1, 130)
    doc = json.loads(run("gen", "paley", "--v", "7").stdout)
    assert doc["blocks"][0] == [1, 2, 4]


def test_cyclic_embed_and_verify(tmp_path):
    design = write(tmp_path, "d.json", run("gen", "dev", "--v", "13", "--set", "0,1,3,9").stdout)
    res = run("embed", "cyclic", "--p", "3", "--poly", "1,2,0,1", "--in", design)
    assert res.returncode == 0
    emb = json.loads(res.stdout)
    assert emb["meta"]["sigma_-1"] == "(0,0,0)"
    assert emb["meta"]["sign"] == -1
    embedding = write(tmp_path, "e.json", res.stdout)
    res = run("verify", "--design", design, "--embedding", embedding)
    assert res.returncode == 0
    res = run("verify", "--design", design, "--embedding", embedding, "--strong")
    assert res.returncode == 1
    rep = json.loads(res.stdout)
    assert rep["additive"] is True and rep["strong"] == "fail"


def test_fano_strong(tmp_path):
    design = write(tmp_path, "d.json", run("gen", "pg", "--n", "2", "--q", "2", "--d", "1").stdout)
    embedding = write(tmp_path, "e.json", run("embed", "symmetric", "--in", design).stdout)
    res = run("verify", "--design", design, "--embedding", embedding, "--strong")
    assert res.returncode == 0
    assert json.loads(res.stdout)["zero_sum_subsets"] == 7
    res = run("verify", "--design", design, "--embedding", embedding, "--strong", "--cap", "10")
    assert res.returncode == 2
    assert json.loads(res.stdout)["strong"] == "skipped"


def test_subspace_embed_coordinates(tmp_path):
    design = write(tmp_path, "d.json", run("gen", "pg", "--n", "3", "--q", "3", "--d", "1").stdout)
    res = run("embed", "subspace", "--q", "3", "--poly", "1,0,0,1,2", "--in", design)
    assert res.returncode == 0
    emb = json.loads(res.stdout)
    assert [0, 1, 2, 1] in emb["image"]
    embedding = write(tmp_path, "e.json", res.stdout)
    assert run("verify", "--design", design, "--embedding", embedding).returncode == 0


def test_subspace_embed_field_model(tmp_path):
    design = write(tmp_path, "d.json",
                   run("gen", "pg", "--n", "3", "--q", "3", "--d", "1", "--field-model", "--poly", "1,0,0,1,2").stdout)
    emb = json.loads(run("embed", "subspace", "--q", "3", "--poly", "1,0,0,1,2", "--in", design).stdout)
    assert emb["image"][13] == [0, 1, 2, 1]


def test_errors(tmp_path):
    ag = write(tmp_path, "ag.json", run("gen", "ag", "--n", "2", "--q", "3", "--d", "1").stdout)
    res = run("embed", "symmetric", "--in", ag)
    assert res.returncode == 1
    assert "NotSymmetric" in res.stderr
    fano = write(tmp_path, "f.json", run("gen", "pg", "--n", "2", "--q", "2", "--d", "1").stdout)
    emb = write(tmp_path, "e.json", run("embed", "identity", "--q", "3", "--in", ag).stdout)
    assert run("verify", "--design", fano, "--embedding", emb).returncode == 2
    assert run("gen", "paley", "--v", "13").returncode == 1
    assert run("gen", "pg", "--n", "2").returncode == 2
    assert run("bogus").returncode == 2
    assert run("verify", "--design", str(tmp_path / "missing.json"), "--embedding", emb).returncode == 2
    bad = write(tmp_path, "bad.json", "{not json")
    assert run("info", "file", "--in", bad).returncode == 2


def test_deterministic(tmp_path):
    outs = []
    for _ in range(2):
        design = run("gen", "pg", "--n", "3", "--q", "2", "--d", "1").stdout
        emb = run("embed", "pg", "--n", "3", "--q", "2", "--d", "1").stdout
        d = write(tmp_path, "d.json", design)
        e = write(tmp_path, "e.json", emb)
        rep = run("verify", "--design", d, "--embedding", e, "--strong", "--jobs", "3").stdout
        outs.append((design, emb, rep))
    assert outs[0] == outs[1]
    assert json.loads(outs[0][2])["zero_sum_subsets"] == 35


def test_info():
    res = run("info", "order", "--u", "3", "--v", "910")
    assert json.loads(res.stdout)["order"] == 12
    res = run("info", "file", stdin=run("gen", "paley", "--v", "11", "--as-set").stdout)
    assert json.loads(res.stdout) == {"type": "difference-set", "v": 11, "k": 5, "lambda": 2}
