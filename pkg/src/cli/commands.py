"""Subcomandos de la línea de comandos.

Cada manejador recibe los argumentos y el cuerpo, y devuelve el documento
JSON y el código de salida: 0 si todo fue bien, 1 si una verificación
falló, 2 ante errores de uso, sintaxis, dominio o precondición.
"""

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from .acceptance import run_acceptance
from .cache import ReportCache, cache_key
from .parser import infer_alphabet, lower, parse_expr, parse_word, word_alphabet
from ..algebra.field import Field
from ..algebra.freepoly import FreePoly, word_text
from ..centralizer.recognition import centralizer_report, stabilized_report
from ..centralizer.roots import integral_closure_probe, nc_root
from ..genmat.identities import exhaustive_identity_check, pi_test
from ..genmat.matrices import ConcreteMatrix, pi_map
from ..genmat.spectral import charpoly, minpoly, spectral_probe
from ..genmat.traces import ut_eval
from ..utils.errors import (DomainViolationError, ParseError, PreconditionError,
                            StructureMismatchError, UsageError)
from ..utils.settings import Defaults, configure_logging
from ..words.bergman import bergman_projection
from ..words.periodic import inf_cmp

logger = logging.getLogger(__name__)

Outcome = Tuple[dict, int]

ERROR_KINDS = (
    (UsageError, 'usage'),
    (DomainViolationError, 'domain'),
    (PreconditionError, 'precondition'),
    (StructureMismatchError, 'structure'),
)

RATIONAL_ENTRY = re.compile(r"-?\d+(/\d+)?")


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que lanza UsageError en lugar de terminar el proceso."""

    def error(self, message):
        raise UsageError(message)


# ----------------------------------------------------------------------
# Utilidades
# ----------------------------------------------------------------------
def _poly(text: str, field: Field, s: Optional[int]) -> FreePoly:
    expr = parse_expr(text, s)
    return lower(expr, field, s if s is not None else infer_alphabet(expr))


def _polys(texts: Sequence[str], field: Field, s: Optional[int]) -> List[FreePoly]:
    exprs = [parse_expr(t, s) for t in texts]
    if s is None:
        s = max(infer_alphabet(e) for e in exprs)
    return [lower(e, field, s) for e in exprs]


def _modulus(args, field: Field, default: int) -> int:
    if args.modulus is not None:
        return args.modulus
    return field.modulus if field.is_prime_field else default


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"semilla inválida: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"la semilla debe ser no negativa: {value}")
    return value


def _matrix_entry(value, field: Field):
    # enteros JSON o cadenas "a" / "a/b"; nada de flotantes
    if isinstance(value, int) and not isinstance(value, bool):
        return field(value)
    if isinstance(value, str) and RATIONAL_ENTRY.fullmatch(value.strip()):
        return field(Fraction(value.strip()))
    raise UsageError(f"entrada de matriz inválida: {value!r} (se esperaba un entero o 'a/b')")


def _matrix(text: str, field: Field) -> ConcreteMatrix:
    try:
        rows = json.loads(text)
    except ValueError as e:
        raise UsageError(f"matriz JSON inválida: {e}")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise UsageError("la matriz debe ser una lista de filas")
    try:
        return ConcreteMatrix(field, [[_matrix_entry(v, field) for v in row] for row in rows])
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"entrada de matriz inválida: {e}")


def _coefficients(poly, field: Field) -> list:
    return poly.to_list(field.to_json)


# ----------------------------------------------------------------------
# Manejadores
# ----------------------------------------------------------------------
def cmd_centralizer(args, field: Field) -> Outcome:
    f = _poly(args.expr, field, args.s)
    doc = None
    cache = None
    key = cache_key(f.to_text(), field.descriptor, args.degree,
                    {'alphabet': f.alphabet_size, 'auto_degree': args.auto_degree})
    if not args.no_cache:
        cache = ReportCache(Defaults.cache_directory(args.cache_dir))
        doc = cache.get(key)
    if doc is None:
        if args.auto_degree:
            start = min(max(1, f.degree), args.degree)
            report = stabilized_report(f, start, args.degree)
        else:
            report = centralizer_report(f, args.degree)
        doc = report.to_dict()
        if cache is not None:
            cache.put(key, doc)
    return doc, 1 if doc.get('counterexample') is not None else 0


def cmd_pitest(args, field: Field) -> Outcome:
    f = _poly(args.expr, field, args.s)
    q = _modulus(args, field, Defaults.DEFAULT_PRIME)
    doc = pi_test(f, args.order, args.samples, args.seed, q).to_dict()
    if args.exhaustive is not None:
        doc['exhaustive'] = exhaustive_identity_check(f, args.order, args.exhaustive).to_dict()
    return doc, 0


def cmd_charpoly(args, field: Field) -> Outcome:
    if args.matrix is not None:
        m = _matrix(args.matrix, field)
        return {'matrix': m.to_json(), 'field': field.descriptor,
                'charpoly': _coefficients(charpoly(m), field)}, 0
    if args.expr is None:
        raise UsageError("charpoly requiere --matrix o -f")
    f = _poly(args.expr, field, args.s)
    generic = charpoly(pi_map(f, args.order))
    return {'f': f.to_text(), 'n': args.order, 'field': field.descriptor,
            'charpoly': [c.to_text() for c in generic.coeffs]}, 0


def cmd_minpoly(args, field: Field) -> Outcome:
    m = _matrix(args.matrix, field)
    mp, cp = minpoly(m), charpoly(m)
    return {'matrix': m.to_json(), 'field': field.descriptor,
            'minpoly': _coefficients(mp, field), 'charpoly': _coefficients(cp, field),
            'coincide': mp == cp}, 0


def cmd_spectral(args, field: Field) -> Outcome:
    f = _poly(args.expr, field, args.s)
    q = args.modulus if args.modulus is not None else Defaults.SPECTRAL_PRIME
    return spectral_probe(f, args.order, args.trials, args.seed, q).to_dict(), 0


def cmd_wordcmp(args, field: Field) -> Outcome:
    u, v = parse_word(args.u), parse_word(args.v)
    if not u or not v:
        raise DomainViolationError("wordcmp requiere palabras no vacías")
    order = parse_word(args.order) if args.order else None
    if order is not None and sorted(order) != list(range(word_alphabet(u, v, order))):
        raise UsageError("--order debe listar cada letra del alfabeto una vez")
    return {'u': word_text(u), 'v': word_text(v), 'cmp': inf_cmp(u, v, order).value}, 0


def cmd_bergman(args, field: Field) -> Outcome:
    generators = _polys(args.generators, field, args.s)
    order = parse_word(args.order) if args.order else None
    projection = bergman_projection(generators, order)
    doc = projection.to_dict(field)
    doc['generators'] = [g.to_text() for g in generators]
    return doc, 0


def cmd_ncroot(args, field: Field) -> Outcome:
    h = _poly(args.expr, field, args.s)
    root = nc_root(h, args.k)
    return {'h': h.to_text(), 'k': args.k, 'field': field.descriptor,
            'exists': root is not None, 'root': root.to_text() if root is not None else None}, 0


def cmd_uttrace(args, field: Field) -> Outcome:
    f = _poly(args.expr, field, args.s)
    q = _modulus(args, field, Defaults.DEFAULT_PRIME)
    image = ut_eval(f, args.order, args.seed, q)
    return {'f': f.to_text(), 'n': args.order, 'seed': args.seed, 'q': q,
            'image': image.to_json(), 'trace': image.field.residue(image.trace()),
            'strictly_upper': image.is_strictly_upper(), 'zero': image.is_zero()}, 0


def cmd_closure(args, field: Field) -> Outcome:
    f = _poly(args.expr, field, args.s)
    extras = [_poly(text, field, f.alphabet_size) for text in args.candidates]
    probe = integral_closure_probe(f, args.degree, args.trials, args.seed, extras, args.k)
    return probe.to_dict(), 1 if probe.failed else 0


def cmd_verify_all(args, field: Field) -> Outcome:
    results = run_acceptance(args.quick, args.seed, args.only or None)
    passed = all(r.passed for r in results)
    return {'passed': passed, 'settings': Defaults.summary(),
            'criteria': [r.to_dict() for r in results]}, 0 if passed else 1


HANDLERS: Dict[str, Callable[..., Outcome]] = {
    'centralizer': cmd_centralizer,
    'pitest': cmd_pitest,
    'charpoly': cmd_charpoly,
    'minpoly': cmd_minpoly,
    'spectral': cmd_spectral,
    'wordcmp': cmd_wordcmp,
    'bergman': cmd_bergman,
    'ncroot': cmd_ncroot,
    'uttrace': cmd_uttrace,
    'closure': cmd_closure,
    'verify-all': cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    """Construye el analizador de argumentos con todos los subcomandos."""
    common = _ArgumentParser(add_help=False)
    common.add_argument('--field', default=Defaults.DEFAULT_FIELD, help="q | p:<primo>")
    common.add_argument('--seed', type=_seed, default=Defaults.DEFAULT_SEED)
    common.add_argument('--json', action='store_true', help="JSON compacto en una línea")
    common.add_argument('--cache-dir', default=None)
    common.add_argument('--no-cache', action='store_true')
    common.add_argument('-v', '--verbose', action='store_true')

    parser = _ArgumentParser(prog='ncalg', description="Álgebra libre, matrices genéricas y centralizadores")
    sub = parser.add_subparsers(dest='command', required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    def expr_flags(p, order_default: Optional[int] = None):
        p.add_argument('-f', '--expr', required=True)
        p.add_argument('-s', type=int, default=None, help="tamaño del alfabeto (se infiere si se omite)")
        if order_default is not None:
            p.add_argument('-n', '--order', type=int, default=order_default)

    p = command('centralizer', "base del centralizador y generador reconocido")
    expr_flags(p)
    p.add_argument('-d', '--degree', type=int, default=6)
    p.add_argument('--auto-degree', action='store_true',
                   help="aumenta D hasta que h se estabiliza (D es el máximo)")

    p = command('pitest', "prueba aleatoria de identidad en M_n")
    expr_flags(p, 2)
    p.add_argument('--samples', type=int, default=Defaults.PI_TEST_SAMPLES)
    p.add_argument('-q', '--modulus', type=int, default=None)
    p.add_argument('--exhaustive', type=int, default=None, metavar='Q',
                   help="además evalúa todas las tuplas sobre F_Q")

    p = command('charpoly', "polinomio característico (matriz concreta o π(f))")
    p.add_argument('--matrix', default=None, help="filas JSON, p. ej. [[1,2],[3,4]]")
    p.add_argument('-f', '--expr', default=None)
    p.add_argument('-s', type=int, default=None)
    p.add_argument('-n', '--order', type=int, default=2)

    p = command('minpoly', "polinomio mínimo de una matriz concreta")
    p.add_argument('--matrix', required=True)

    p = command('spectral', "sondeo espectral en orden primo")
    expr_flags(p, 2)
    p.add_argument('--trials', type=int, default=Defaults.SPECTRAL_TRIALS)
    p.add_argument('-q', '--modulus', type=int, default=None)

    p = command('wordcmp', "compara u^inf con v^inf")
    p.add_argument('u')
    p.add_argument('v')
    p.add_argument('--order', default=None, help="letras en orden creciente, p. ej. 'ba'")

    p = command('bergman', "proyección de Bergman de un conjunto de generadores")
    p.add_argument('-g', '--generator', dest='generators', action='append', required=True)
    p.add_argument('-s', type=int, default=None)
    p.add_argument('--order', default=None)

    p = command('ncroot', "raíz k-ésima no conmutativa")
    expr_flags(p)
    p.add_argument('-k', type=int, required=True)

    p = command('uttrace', "evaluación en triangulares estrictas")
    expr_flags(p, 3)
    p.add_argument('-q', '--modulus', type=int, default=None)

    p = command('closure', "sondeo de la clausura integral del centralizador")
    expr_flags(p)
    p.add_argument('-d', '--degree', type=int, default=8)
    p.add_argument('--trials', type=int, default=Defaults.CLOSURE_TRIALS)
    p.add_argument('--candidate', dest='candidates', action='append', default=[])
    p.add_argument('-k', type=int, default=2, help="exponente de los candidatos extra")

    p = command('verify-all', "ejecuta la batería de aceptación")
    p.add_argument('--quick', action='store_true')
    p.add_argument('--only', type=int, action='append', default=[])
    return parser


def emit(doc: dict, compact: bool, stream: TextIO):
    if compact:
        text = json.dumps(doc, ensure_ascii=False, separators=(',', ':'))
    else:
        text = json.dumps(doc, ensure_ascii=False, indent=2)
    stream.write(text + '\n')


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Punto de entrada de la CLI.

    Args:
        argv: Argumentos (None = sys.argv[1:])
        stdout: Flujo de salida (None = sys.stdout)

    Returns:
        Código de salida
    """
    stream = stdout if stdout is not None else sys.stdout
    compact = False
    try:
        args = build_parser().parse_args(argv)
        compact = args.json
        configure_logging(args.verbose)
        field = Field.parse(args.field)
        doc, code = HANDLERS[args.command](args, field)
    except ParseError as e:
        doc, code = e.to_dict(), 2
    except (UsageError, DomainViolationError, PreconditionError, StructureMismatchError) as e:
        kind = next(name for cls, name in ERROR_KINDS if isinstance(e, cls))
        doc, code = {'error': kind, 'message': str(e)}, 2
        payload = getattr(e, 'payload', None)
        if payload is not None:
            doc['payload'] = payload if isinstance(payload, (str, int, list)) else str(payload)
    emit(doc, compact, stream)
    return code
