import csv
import logging

import pytest
from mplinalg.bench.cli import main
from mplinalg.internal.constants import CSV_HEADER, EPS_DD, EPS_QD
from mplinalg.internal.exceptions import SingularMatrixError

logger = logging.getLogger(__name__)


def run_csv(tmp_path, argv):
    out = tmp_path / 'out.csv'
    code = main(argv + ['--out', str(out)])
    with open(out, newline='') as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [dict(zip(header, r)) for r in reader]
    assert header == CSV_HEADER
    return code, rows


def test_matmul_grid(tmp_path):
    code, rows = run_csv(tmp_path, ['matmul', '--prec', 'dd', '--n', '8..9', '--algo',
                                    'simple,block,strassen,winograd', '--workers', '1,2', '--nmin', '4',
                                    '--bs', '4', '--reps', '1', '--verify'])
    assert code == 0
    assert len(rows) == 2 * 4 * 2
    for row in rows:
        assert row['experiment'] == 'matmul:bench'
        assert float(row['seconds_median']) > 0
        assert row['mul_count'] == ''
        assert float(row['max_rel_error']) <= 4 * int(row['n']) * EPS_DD


def test_matmul_counts(tmp_path):
    code, rows = run_csv(tmp_path, ['matmul', '--prec', 'dd', '--n', '64', '--algo', 'strassen', '--count-ops'])
    assert code == 0
    assert rows[0]['mul_count'] == '229376'
    assert rows[0]['seconds_median'] == ''


def test_matmul_to_stdout_qd(capsys):
    assert main(['matmul', '--prec', 'qd', '--n', '16', '--algo', 'simple', '--verify', '--reps', '1']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ','.join(CSV_HEADER)
    row = dict(zip(CSV_HEADER, lines[1].split(',')))
    assert float(row['max_rel_error']) <= 64 * EPS_QD


def test_matmul_random_pair(tmp_path):
    code, rows = run_csv(tmp_path, ['matmul', '--matrix', 'random', '--n', '12', '--algo', 'block',
                                    '--reps', '1', '--verify', '--seed', '7'])
    assert code == 0
    assert rows[0]['experiment'] == 'matmul:random'
    assert float(rows[0]['max_rel_error']) == 0.0


def test_saved_product_verifies(tmp_path, capsys):
    save = tmp_path / 'products'
    code, _ = run_csv(tmp_path, ['matmul', '--n', '10', '--algo', 'block', '--bs', '3', '--reps', '1',
                                 '--save', str(save)])
    assert code == 0
    stored = save / 'matmul_dd_block_n10_w1.txt'
    assert stored.exists()
    code = main(['verify', '--n', '8', '--nmin', '2', '--product-file', str(stored)])
    out = capsys.readouterr().out
    assert code == 0
    assert 'PASS product_file' in out


def test_lu_sweep(tmp_path):
    code, rows = run_csv(tmp_path, ['lu', '--prec', 'dd', '--n', '16', '--nmin', '4', '--alpha', '1..3',
                                    '--update', 'block,winograd', '--workers', '2', '--baseline', '--reps', '1'])
    assert code == 0
    assert len(rows) == 3 * 2 + 1
    assert [r['bs'] for r in rows[:6]] == ['4', '4', '8', '8', '12', '12']
    assert rows[-1]['algorithm'] == 'rowwise'
    assert rows[-1]['alpha'] == ''
    assert all(r['experiment'] == 'lu:random' for r in rows)


def test_lu_single_panel_equals_baseline(tmp_path):
    code, rows = run_csv(tmp_path, ['lu', '--n', '24', '--alpha', '64', '--baseline', '--reps', '1'])
    assert code == 0
    blocked, rowwise = rows
    assert blocked['max_rel_error'] == rowwise['max_rel_error']


def test_lu_lotkin_errors_grow(tmp_path):
    code, rows = run_csv(tmp_path, ['lu', '--prec', 'qd', '--matrix', 'lotkin', '--n', '4,8,12', '--nmin', '2',
                                    '--reps', '1'])
    assert code == 0
    errors = [float(r['max_rel_error']) for r in rows]
    assert errors == sorted(errors)


def test_failed_row(tmp_path, mocker):
    mocker.patch('mplinalg.api.lu.LuSolver.solve', side_effect=SingularMatrixError('zero pivot', index=0))
    code, rows = run_csv(tmp_path, ['lu', '--n', '8', '--nmin', '4', '--reps', '1'])
    assert code == 2
    assert rows[0]['max_rel_error'] == 'failed:zero_pivot'
    assert rows[0]['n'] == '8'


def test_verify_suite(capsys):
    assert main(['verify', '--n', '16', '--nmin', '4', '--workers', '2']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines
    assert all(line.startswith('PASS ') for line in lines)


@pytest.mark.parametrize('argv', [
    [],
    ['matmul', '--prec', 'hd'],
    ['matmul', '--n', '5..2'],
    ['matmul', '--algo', 'cannon'],
    ['matmul', '--matrix', 'lotkin'],
    ['lu', '--alpha', '0'],
    ['matmul', '--count-ops', '--executor', 'process'],
    ['matmul', '--nmin', '1'],
    ['lu', '--log-level', 'LOUD'],
    ['transpose'],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 1
    assert 'mplinalg-bench' in capsys.readouterr().err
