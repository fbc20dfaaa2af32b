import numpy as np
import pytest

import sparseclique as sc
from sparseclique import instances

GENERABLE = [name for name, row in instances.REGISTRY.items() if row.generable]


@pytest.mark.parametrize("name", GENERABLE)
def test_generated_shape_matches_published(name):
    row = instances.info(name)
    g = instances.generate(name)
    assert g.n == row.n
    assert g.m == row.m
    if row.max_degree is not None:
        assert g.max_degree == row.max_degree


def test_unknown_instance():
    with pytest.raises(instances.InstanceUnavailable):
        instances.info("florp")
    with pytest.raises(instances.InstanceUnavailable):
        instances.generate("florp")


def test_file_only_instances_raise_without_file(tmp_path, monkeypatch):
    monkeypatch.setenv(instances.BENCH_DIR_ENV, str(tmp_path))
    monkeypatch.chdir(tmp_path)
    assert not instances.available("brock200_2")
    with pytest.raises(instances.InstanceUnavailable):
        instances.load("brock200_2")


def test_file_override_is_validated(tmp_path, monkeypatch):
    monkeypatch.setenv(instances.BENCH_DIR_ENV, str(tmp_path))
    wrong = sc.Graph.from_edges(3, [(0, 1)])
    sc.save_graph(wrong, tmp_path / "hamming6-4.clq")
    with pytest.raises(ValueError, match="published shape"):
        instances.load("hamming6-4")


def test_file_override_used_when_valid(tmp_path, monkeypatch):
    monkeypatch.setenv(instances.BENCH_DIR_ENV, str(tmp_path))
    g = instances.generate("hamming6-4")
    sc.save_graph(g, tmp_path / "hamming6-4.clq")
    assert instances.load("hamming6-4") == g


def test_real_world_degree_spot_checks(load_instance):
    # published maximum degrees; these graphs are file-only and skip offline
    g = load_instance("as-Skitter")
    assert g.max_degree == 35455


def test_word_network_degree(load_instance):
    g = load_instance("dictionary28")
    assert g.max_degree == 38


def test_registry_regular_families_degree_math():
    # hamming/johnson instances are vertex-transitive: every degree equals
    # the registry max degree
    for name in ("hamming6-4", "hamming6-2", "johnson8-4-4", "johnson16-2-4"):
        g = instances.generate(name)
        degs = np.diff(g.indptr)
        assert degs.min() == degs.max() == instances.info(name).max_degree
