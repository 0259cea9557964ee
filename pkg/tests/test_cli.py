"""Tests for the command-line front end and the JSON interchange layer."""

import json
import subprocess
import sys

import numpy as np
import pytest

from weylgraph.cli import main
from weylgraph.covariant import q_projection
from weylgraph.graphs import anticlique_projector
from weylgraph.linalg import frob, tensor_product
from weylgraph.serialize import (CANONICAL_CHECK_ORDER, dumps, format_float,
                                 matrix_to_obj, obj_to_matrix)
from weylgraph.weylrep import entangled_basis

Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


# -- verify ------------------------------------------------------------------

def test_verify_report_schema(tmp_path):
    out = tmp_path / 'report.json'
    assert main(['verify', '--n', '2', '--json', str(out)]) == 0
    obj = json.loads(out.read_text())
    assert list(obj) == ['n', 'tol', 'checks', 'graph', 'discrepancies',
                         'timing_ms']
    assert obj['n'] == 2
    assert obj['tol'] == 1e-10
    assert [c['id'] for c in obj['checks']] == list(CANONICAL_CHECK_ORDER)
    assert all(c['pass'] for c in obj['checks'])
    assert all(c['max_residual'] <= 1e-10 for c in obj['checks'])
    assert list(obj['graph']) == ['dim_orbit', 'dim_z_span', 'dim_h_span',
                                  'orbit_equals_z', 'orbit_equals_h']
    assert obj['discrepancies'] == []
    assert obj['timing_ms'] == 0


def test_verify_writes_stdout(capsys):
    assert main(['verify', '--n', '3']) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj['n'] == 3
    # the h-family mismatch at n = 3 is reported as a discrepancy, not a failure
    assert len(obj['discrepancies']) == 1
    assert all(c['pass'] for c in obj['checks'])


def test_verify_rejects_small_n(capsys):
    assert main(['verify', '--n', '1']) == 2
    assert 'at least 2' in capsys.readouterr().err


def test_verify_rejects_bad_tol(capsys):
    assert main(['verify', '--n', '2', '--tol', '0']) == 2


def test_verify_io_error(tmp_path, capsys):
    missing = tmp_path / 'no' / 'such' / 'dir' / 'report.json'
    assert main(['verify', '--n', '2', '--json', str(missing)]) == 3
    assert 'i/o error' in capsys.readouterr().err


# -- scan ----------------------------------------------------------------------

def test_scan_emits_ascending_reports(tmp_path):
    out = tmp_path / 'scan.json'
    assert main(['scan', '--n-min', '2', '--n-max', '4',
                 '--json', str(out)]) == 0
    reports = json.loads(out.read_text())
    assert [r['n'] for r in reports] == [2, 3, 4]
    for r in reports:
        assert all(c['pass'] for c in r['checks'])
        assert r['timing_ms'] == 0


def test_scan_rejects_bad_range(capsys):
    assert main(['scan', '--n-min', '6', '--n-max', '2']) == 2
    assert main(['scan', '--n-min', '2', '--n-max', '65']) == 2
    assert main(['scan', '--n-min', '1', '--n-max', '3']) == 2


def test_scan_repeats_identically(capsys):
    assert main(['scan', '--n-min', '2', '--n-max', '3']) == 0
    first = capsys.readouterr().out
    assert main(['scan', '--n-min', '2', '--n-max', '3']) == 0
    second = capsys.readouterr().out
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, '-m', 'weylgraph', 'verify', '--n', '2'],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)['n'] == 2


# -- export --------------------------------------------------------------------

def test_export_shift_literal(capsys):
    assert main(['export', '--n', '2', '--what', 'S']) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {'dim': 2, 'entries': [[0.0, 0.0], [1.0, 0.0],
                                         [1.0, 0.0], [0.0, 0.0]]}


def test_export_basis_vectors(capsys):
    assert main(['export', '--n', '2', '--what', 'basis']) == 0
    objs = json.loads(capsys.readouterr().out)
    assert len(objs) == 4
    basis = entangled_basis(2)
    # lexicographic (k, j) order
    order = [(k, j) for k in range(2) for j in range(2)]
    for obj, (k, j) in zip(objs, order):
        assert obj['dim'] == 4
        assert frob(obj_to_matrix(obj) - basis.vector(k, j)) <= 1e-15


def test_export_q_roundtrip(capsys):
    assert main(['export', '--n', '3', '--what', 'Q', '--s', '1']) == 0
    mat = obj_to_matrix(json.loads(capsys.readouterr().out))
    assert frob(mat - q_projection(3, 1)) <= 1e-15
    assert np.trace(mat).real == pytest.approx(3.0)


def test_export_p_roundtrip(capsys):
    assert main(['export', '--n', '3', '--what', 'P', '--k', '2']) == 0
    mat = obj_to_matrix(json.loads(capsys.readouterr().out))
    assert frob(mat - anticlique_projector(3, 2)) <= 1e-13


def test_export_rep_generator_closed_form(capsys):
    assert main(['export', '--n', '2', '--what', 'piS']) == 0
    mat = obj_to_matrix(json.loads(capsys.readouterr().out))
    assert frob(mat - tensor_product(Z, np.eye(2, dtype=complex))) <= 1e-13


def test_export_generator_families(capsys):
    assert main(['export', '--n', '3', '--what', 'h-generators']) == 0
    h_objs = json.loads(capsys.readouterr().out)
    assert len(h_objs) == 3
    assert frob(obj_to_matrix(h_objs[0]) - np.eye(9)) <= 1e-12

    assert main(['export', '--n', '3', '--what', 'z-generators']) == 0
    z_objs = json.loads(capsys.readouterr().out)
    assert len(z_objs) == 3
    for c, obj in enumerate(z_objs):
        want = 3.0 * q_projection(3, (-c) % 3)
        assert frob(obj_to_matrix(obj) - want) <= 1e-11


def test_export_to_file(tmp_path):
    out = tmp_path / 'm.json'
    assert main(['export', '--n', '2', '--what', 'M', '--out', str(out)]) == 0
    mat = obj_to_matrix(json.loads(out.read_text()))
    assert frob(mat - Z) <= 1e-15


def test_export_q_requires_s(capsys):
    assert main(['export', '--n', '3', '--what', 'Q']) == 2
    assert main(['export', '--n', '3', '--what', 'Q', '--s', '3']) == 2
    assert main(['export', '--n', '3', '--what', 'P']) == 2


def test_export_rejects_unknown_what(capsys):
    assert main(['export', '--n', '3', '--what', 'nonsense']) == 2


# -- kl-check --------------------------------------------------------------------

def test_kl_check_compression_scalars(tmp_path):
    out = tmp_path / 'kl.json'
    assert main(['kl-check', '--n', '4', '--k', '1', '--s', '2',
                 '--json', str(out)]) == 0
    obj = json.loads(out.read_text())
    assert (obj['n'], obj['k'], obj['s']) == (4, 1, 2)
    assert obj['is_anticlique'] is True
    assert obj['max_residual'] <= 1e-10
    assert list(obj['lambda']) == [f'{p},{q}' for p in range(4) for q in range(4)]
    for re, im in obj['lambda'].values():
        assert abs(re - 0.25) <= 1e-10
        assert abs(im) <= 1e-10


def test_kl_check_rejects_bad_indices(capsys):
    assert main(['kl-check', '--n', '3', '--k', '3', '--s', '0']) == 2
    assert main(['kl-check', '--n', '3', '--k', '0', '--s', '-1']) == 2


def test_kl_check_io_error(tmp_path, capsys):
    missing = tmp_path / 'nope' / 'kl.json'
    assert main(['kl-check', '--n', '2', '--k', '0', '--s', '0',
                 '--json', str(missing)]) == 3


# -- serialization ------------------------------------------------------------

def test_format_float_17_digits():
    assert format_float(1.0 / 3.0) == '0.33333333333333331'
    assert format_float(0.25) == '0.25'
    with pytest.raises(ValueError):
        format_float(float('inf'))


def test_dumps_scalars_and_nesting():
    text = dumps({'a': [1, 2.5], 'b': True, 'c': None, 'd': 1 + 2j, 'e': 'x'})
    obj = json.loads(text)
    assert obj == {'a': [1, 2.5], 'b': True, 'c': None,
                   'd': [1.0, 2.0], 'e': 'x'}
    # scalar-only lists stay on one line
    assert '[1, 2.5]' in text


def test_matrix_roundtrip():
    rng = np.random.default_rng(9)
    m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    obj = matrix_to_obj(m)
    assert obj['dim'] == 3
    assert len(obj['entries']) == 9
    assert frob(obj_to_matrix(obj) - m) <= 1e-15


def test_vector_roundtrip():
    v = np.array([1.0, 2.0j, -1.0, 0.5])
    obj = matrix_to_obj(v)
    assert obj['dim'] == 4
    assert len(obj['entries']) == 4
    assert frob(obj_to_matrix(obj) - v) <= 1e-15


def test_matrix_obj_validation():
    with pytest.raises(ValueError):
        matrix_to_obj(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        obj_to_matrix({'dim': 3, 'entries': [[0.0, 0.0]] * 5})
    with pytest.raises(ValueError):
        matrix_to_obj(np.array([np.inf, 0.0]))
