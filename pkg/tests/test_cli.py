import json
import os
import subprocess
import sys

import numpy as np
import pytest

from msdist.cli import main
from msdist.errors import ConfigurationError, CorpusError
from msdist.ground import lcs_ground, steinhaus_transform
from msdist.pipeline import (
    Corpus,
    DistanceConfig,
    ObservationDistance,
    audit_command,
    embed_command,
    load_corpus,
    pairwise_matrix,
    random_corpus,
    read_matrix_csv,
)
from msdist.setdist import fixed_penalty_matching_distance


def write_corpus(path, records):
    with open(path, "w") as fh:
        for r in records:
            fh.write((r if isinstance(r, str) else json.dumps(r)) + "\n")
    return str(path)


TOY = [
    {"id": "a", "paths": [["GK", "CB", "CM"], ["CM", "ST"]], "meta": {"team": "x"}},
    {"id": "b", "paths": [["CB", "CM", "ST"]], "meta": {"team": "y"}},
    {"id": "c", "paths": [["GK", "LB"], ["LB", "LW", "ST"], ["CM"]], "meta": {"team": "x"}},
]


def test_load_corpus(tmp_path):
    c = load_corpus(write_corpus(tmp_path / "c.jsonl", TOY[:2]))
    assert len(c) == 2 and c.ids == ["a", "b"] and c[0].meta == {"team": "x"}


@pytest.mark.parametrize(
    "bad,line",
    [
        ([TOY[0], {"id": "z", "paths": [["a", ""]]}], 2),
        ([TOY[0], TOY[0]], 2),
        (["{not json"], 1),
        ([TOY[0], TOY[1], {"id": "q", "paths": "abc"}], 3),
        ([{"paths": []}], 1),
    ],
)
def test_load_corpus_errors(tmp_path, bad, line):
    with pytest.raises(CorpusError) as exc:
        load_corpus(write_corpus(tmp_path / "c.jsonl", bad))
    assert exc.value.lineno == line and str(exc.value).startswith(f"line {line}:")


def test_config_validation():
    with pytest.raises(ConfigurationError):
        DistanceConfig("fp-matching", "lcs")
    with pytest.raises(ConfigurationError):
        DistanceConfig("semd", "lcs")
    with pytest.raises(ConfigurationError):
        DistanceConfig("nope", "lcs")
    with pytest.raises(ConfigurationError):
        DistanceConfig("emd", "lcs", steinhaus_outer=True)


def test_identical_observations_give_zero_matrix():
    c = Corpus(tuple(random_corpus(1).observations[0].__class__(f"o{k}", (("a", "b"),), {}) for k in range(4)))
    D = pairwise_matrix(c, DistanceConfig("fp-matching", "lcs", rho=0.5, steinhaus_ground=True))
    assert np.all(D == 0)


def test_matches_library_calls(tmp_path):
    c = load_corpus(write_corpus(tmp_path / "c.jsonl", TOY))
    cfg = DistanceConfig("fp-matching", "lcs", rho=0.5, steinhaus_ground=True)
    D = pairwise_matrix(c, cfg)
    g = steinhaus_transform(lcs_ground(), ())
    for i in range(3):
        for j in range(3):
            want = fixed_penalty_matching_distance(cfg.elements(c[i]), cfg.elements(c[j]), g, 0.5)[0] if i != j else 0
            assert D[i, j] == want


@pytest.mark.parametrize(
    "cfg",
    [
        DistanceConfig("fp-matching", "lcs", rho=0.5, steinhaus_ground=True, steinhaus_outer=True),
        DistanceConfig("emd", "lsp"),
        DistanceConfig("dtw", "discrete"),
        DistanceConfig("edit", "lcs", steinhaus_outer=True),
    ],
)
def test_workers_bit_identical_and_symmetric(cfg):
    c = random_corpus(14, seed=3)
    D1 = pairwise_matrix(c, cfg, workers=1)
    D8 = pairwise_matrix(c, cfg, workers=8)
    assert np.array_equal(D1, D8)
    assert np.array_equal(D1, D1.T) and np.all(np.diag(D1) == 0)


def test_reordering_permutes_matrix():
    c = random_corpus(10, seed=4)
    cfg = DistanceConfig("fp-edit", "lcs", rho=1.0)
    perm = np.random.default_rng(0).permutation(10)
    c2 = Corpus(tuple(c[k] for k in perm))
    assert np.array_equal(pairwise_matrix(c, cfg)[np.ix_(perm, perm)], pairwise_matrix(c2, cfg))


def test_outer_steinhaus_matches_observation_distance():
    c = random_corpus(5, seed=8)
    cfg = DistanceConfig("matching", "lcs", steinhaus_outer=True)
    D = pairwise_matrix(c, cfg)
    d = ObservationDistance(cfg)
    assert D[0, 1] == d(cfg.elements(c[0]), cfg.elements(c[1]))
    assert D.max() <= 1


def test_empty_observation_rejected_for_emd(tmp_path):
    c = load_corpus(write_corpus(tmp_path / "c.jsonl", [TOY[0], {"id": "e", "paths": []}]))
    with pytest.raises(ConfigurationError, match="'e'"):
        pairwise_matrix(c, DistanceConfig("emd", "lcs"))
    assert pairwise_matrix(c, DistanceConfig("matching", "lcs"))[0, 1] == 5.0


def test_scalar_ground(tmp_path):
    recs = [{"id": "p", "paths": [[1], [3]]}, {"id": "q", "paths": [["1"]]}]
    c = load_corpus(write_corpus(tmp_path / "c.jsonl", recs))
    assert pairwise_matrix(c, DistanceConfig("matching", "scalar-abs"))[0, 1] == 3.0
    with pytest.raises(ConfigurationError):
        pairwise_matrix(load_corpus(write_corpus(tmp_path / "d.jsonl", TOY)), DistanceConfig("matching", "scalar-abs"))


def test_embed_command_files(tmp_path):
    c = load_corpus(write_corpus(tmp_path / "c.jsonl", TOY))
    D, emb = embed_command(c, DistanceConfig("fp-matching", "lcs", rho=0.5), 2, str(tmp_path / "out"))
    ids, D2 = read_matrix_csv(tmp_path / "out" / "matrix.csv")
    assert ids == ["a", "b", "c"] and np.array_equal(D, D2)
    rows = (tmp_path / "out" / "coords.csv").read_text().splitlines()
    assert rows[0] == "id,x1,x2,team"
    assert len(rows) == 4 and all(len(r.split(",")) == 2 + 1 + 1 for r in rows)


def test_audit_command():
    rep = audit_command(DistanceConfig("dtw", "scalar-abs"), 500)
    assert rep.count("identity") > 0 and rep.count("triangle") > 0
    rep = audit_command(DistanceConfig("fp-matching", "lcs", rho=0.5, steinhaus_ground=True), 300)
    assert rep.ok
    rep = audit_command(DistanceConfig("emd", "lcs"), 300)
    assert rep.count("identity") > 0 and rep.count("triangle") == 0


def test_main_commands(tmp_path, capsys):
    inp = write_corpus(tmp_path / "c.jsonl", TOY)
    out = tmp_path / "m.csv"
    assert main(["dist", "--input", inp, "--distance", "fp-matching", "--rho", "0.5", "--steinhaus-ground",
                 "--output", str(out)]) == 0
    assert read_matrix_csv(out)[1].shape == (3, 3)
    assert main(["embed", "--input", inp, "--distance", "edit", "--output", str(tmp_path / "e")]) == 0
    header = (tmp_path / "e" / "coords.csv").read_text().splitlines()[0]
    assert header == "id,x1,x2,team"  # default dimension 2
    assert main(["embed", "--input", inp, "--distance", "edit", "--dim", "3", "--output", str(tmp_path / "f")]) == 0
    assert (tmp_path / "f" / "coords.csv").read_text().splitlines()[0] == "id,x1,x2,x3,team"
    assert main(["audit", "--distance", "dtw", "--ground", "discrete", "-n", "300"]) == 0
    assert "identity" in capsys.readouterr().out


def test_main_exit_codes(tmp_path):
    inp = write_corpus(tmp_path / "c.jsonl", TOY)
    assert main(["dist", "--input", inp, "--distance", "fp-matching"]) == 1  # missing rho
    assert main(["dist", "--input", str(tmp_path / "missing.jsonl"), "--rho", "1"]) == 2
    bad = write_corpus(tmp_path / "b.jsonl", ["{oops"])
    assert main(["dist", "--input", bad, "--rho", "1"]) == 1
    assert main(["embed", "--input", inp, "--rho", "1", "--output", "/proc/forbidden/x"]) == 2


def test_module_entry_point(tmp_path):
    inp = write_corpus(tmp_path / "c.jsonl", TOY)
    r = subprocess.run([sys.executable, "-m", "msdist", "dist", "--input", inp, "--rho", "0.5"],
                       capture_output=True, text=True, env=os.environ.copy())
    assert r.returncode == 0 and r.stdout.splitlines()[0] == "id,a,b,c"
