import json
from io import StringIO

from src.cli.commands import run


def _run(*argv):
    out = StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_centralizer_report_is_cached(tmp_path):
    code, first = _run('centralizer', '-f', 'x^2', '-s', '2', '-d', '4', '--cache-dir', str(tmp_path))
    assert code == 0
    doc = json.loads(first)
    assert doc['h'] == 'z0'
    assert doc['recognized']
    assert doc['dimensions'] == [1, 2, 3, 4, 5]
    assert len(list(tmp_path.glob('*.json'))) == 1
    code, second = _run('centralizer', '-f', 'x^2', '-s', '2', '-d', '4', '--cache-dir', str(tmp_path))
    assert code == 0
    assert second == first


def test_centralizer_auto_degree():
    code, out = _run('centralizer', '-f', 'x*y', '-d', '8', '--auto-degree', '--no-cache', '--json')
    assert code == 0
    doc = json.loads(out)
    assert doc['h'] == 'z0 z1'
    assert doc['D'] == 3
    assert out.count('\n') == 1


def test_insufficient_degree_is_not_a_failure():
    code, out = _run('centralizer', '-f', 'x*y*x', '-d', '2', '--no-cache')
    assert code == 0
    assert json.loads(out)['diagnostic'] == 'insufficient degree'


def test_wordcmp():
    assert json.loads(_run('wordcmp', 'ab', 'aab')[1])['cmp'] == 'GT'
    assert json.loads(_run('wordcmp', 'ab', 'abab')[1])['cmp'] == 'EQ'
    assert json.loads(_run('wordcmp', 'ab', 'aab', '--order', 'ba')[1])['cmp'] == 'LT'
    code, out = _run('wordcmp', 'ab', 'aab', '--order', 'a')
    assert code == 2
    assert json.loads(out)['error'] == 'usage'


def test_pitest():
    code, out = _run('pitest', '-f', 'S4', '-n', '2')
    assert code == 0
    doc = json.loads(out)
    assert doc['verdict'] == 'Identity'
    assert doc['confidence_bound'] == '(4/2147483647)^50'
    doc = json.loads(_run('pitest', '-f', 'x y - y x', '-n', '2', '--exhaustive', '2')[1])
    assert doc['verdict'] == 'NonIdentity'
    assert doc['exhaustive']['identity'] is False


def test_ncroot():
    doc = json.loads(_run('ncroot', '-f', '(x+y)^3', '-k', '3')[1])
    assert doc['exists']
    assert doc['root'] == 'z1 + z0'
    doc = json.loads(_run('ncroot', '-f', 'x^2 + y^2', '-k', '2')[1])
    assert not doc['exists']
    assert doc['root'] is None


def test_uttrace():
    doc = json.loads(_run('uttrace', '-f', 'x y + y', '-n', '3')[1])
    assert doc['trace'] == 0
    assert doc['strictly_upper']
    assert json.loads(_run('uttrace', '-f', 'x y x', '-n', '3')[1])['zero']


def test_charpoly_and_minpoly():
    doc = json.loads(_run('charpoly', '--matrix', '[[1,2],[3,4]]', '--field', 'p:7')[1])
    assert doc['charpoly'] == [-2, 2, 1]
    doc = json.loads(_run('charpoly', '--matrix', '[[1,2],[3,4]]', '--field', 'q')[1])
    assert doc['charpoly'] == [-2, -5, 1]
    doc = json.loads(_run('minpoly', '--matrix', '[[2,0],[0,2]]', '--field', 'p:7')[1])
    assert doc['minpoly'] == [-2, 1]
    assert not doc['coincide']
    doc = json.loads(_run('charpoly', '-f', 'x', '-n', '2')[1])
    assert len(doc['charpoly']) == 3


def test_bergman():
    doc = json.loads(_run('bergman', '-g', 'x^2', '-g', 'x^3 + 1')[1])
    assert doc['z'] == '(z0)^inf'
    assert doc['nontrivial']


def test_closure():
    code, out = _run('closure', '-f', 'x^2', '-s', '2', '-d', '6', '--trials', '5', '--candidate', 'y')
    assert code == 0
    doc = json.loads(out)
    assert doc['passed'] == 5
    assert doc['non_members'] == 1


def test_verify_all_single_criterion():
    code, out = _run('verify-all', '--only', '9', '--quick')
    assert code == 0
    doc = json.loads(out)
    assert doc['passed']
    assert [c['number'] for c in doc['criteria']] == [9]


def test_syntax_error():
    code, out = _run('centralizer', '-f', 'x +* y', '--no-cache')
    assert code == 2
    doc = json.loads(out)
    assert doc['error'] == 'syntax'
    assert doc['column'] == 4


def test_domain_and_precondition_errors():
    code, out = _run('centralizer', '-f', 'x', '--field', 'p:8', '--no-cache')
    assert code == 2
    assert json.loads(out)['error'] == 'domain'
    code, out = _run('centralizer', '-f', 'x^2', '-d', '6', '--field', 'p:7', '--no-cache')
    assert code == 2
    assert json.loads(out)['error'] == 'precondition'
    code, out = _run('ncroot', '-f', 'x', '-k', '1')
    assert code == 2


def test_usage_errors():
    code, out = _run()
    assert code == 2
    assert json.loads(out)['error'] == 'usage'
    code, out = _run('centralizer')
    assert code == 2
    code, out = _run('charpoly', '--matrix', '[[1,2]', '--field', 'p:7')
    assert code == 2


def test_matrix_entries_must_be_exact():
    code, out = _run('charpoly', '--matrix', '[[1.5,2],[3,4]]', '--field', 'q')
    assert code == 2
    assert json.loads(out)['error'] == 'usage'
    code, out = _run('charpoly', '--matrix', '[[true,0],[0,1]]', '--field', 'q')
    assert code == 2
    code, out = _run('charpoly', '--matrix', '[["1/2",0],[0,"-3"]]', '--field', 'q')
    assert code == 0
    assert json.loads(out)['charpoly'] == ['-3/2', '5/2', 1]


def test_negative_seed_is_a_usage_error():
    code, out = _run('pitest', '-f', 'S4', '-n', '2', '--seed', '-1')
    assert code == 2
    assert json.loads(out)['error'] == 'usage'


def test_pitest_with_sixty_four_bit_modulus():
    code, out = _run('pitest', '-f', 'S4', '-n', '2', '--samples', '5', '-q', str(2**61 - 1))
    assert code == 0
    assert json.loads(out)['verdict'] == 'Identity'
