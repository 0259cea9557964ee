"""Command-line front end.

Exit codes: 0 all checks pass, 1 at least one identity check fails, 2 usage
error, 3 i/o error.  Discrepancy entries never change the exit code; they are
audit findings, not failures.
"""

from __future__ import annotations

import argparse
import sys

from .covariant import q_projection
from .graphs import (anticlique_projector, check_knill_laflamme, graph_orbit,
                     h_generators, y_units, z_generators)
from .report import run_verification
from .serialize import anticlique_to_obj, dumps, matrix_to_obj, report_to_obj
from .weylrep import element_unitaries, entangled_basis, rep_generators, shift_clock

_EXPORT_CHOICES = ('S', 'M', 'piS', 'piM', 'basis', 'Q', 'P',
                   'h-generators', 'z-generators')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='weylgraph',
        description='construct the shift/clock group action on the doubled '
                    'space and verify its resolution-of-identity, operator-graph '
                    'and anticlique identities numerically')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify', help='run the full check suite at one modulus')
    p.add_argument('--n', type=int, required=True, help='modulus, at least 2')
    p.add_argument('--tol', type=float, default=1e-10, help='absolute tolerance')
    p.add_argument('--json', dest='json_path', metavar='PATH',
                   help='write the report here instead of stdout')
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser('scan', help='verify a whole range of moduli')
    p.add_argument('--n-min', type=int, required=True)
    p.add_argument('--n-max', type=int, required=True)
    p.add_argument('--tol', type=float, default=1e-10)
    p.add_argument('--json', dest='json_path', metavar='PATH')
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser('export', help='emit a constructed object as JSON')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--what', required=True, choices=_EXPORT_CHOICES)
    p.add_argument('--s', type=int, help='base index (required for Q)')
    p.add_argument('--k', type=int, help='code index (required for P)')
    p.add_argument('--out', metavar='PATH', help='output file (default stdout)')
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser('kl-check', help='compress one orbit graph by one code projection')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--s', type=int, required=True)
    p.add_argument('--tol', type=float, default=1e-10)
    p.add_argument('--json', dest='json_path', metavar='PATH')
    p.set_defaults(handler=_cmd_kl_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f'weylgraph: error: {exc}', file=sys.stderr)
        return 2
    except OSError as exc:
        print(f'weylgraph: i/o error: {exc}', file=sys.stderr)
        return 3


class _UsageError(ValueError):
    pass


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise _UsageError(message)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(text)


def _cmd_verify(args) -> int:
    _require(args.n >= 2, '--n must be at least 2')
    _require(args.tol > 0, '--tol must be positive')
    report = run_verification(args.n, args.tol)
    _write(dumps(report_to_obj(report)) + '\n', args.json_path)
    return 0 if report.all_passed() else 1


def _cmd_scan(args) -> int:
    _require(2 <= args.n_min <= args.n_max <= 64,
             '--n-min/--n-max must satisfy 2 <= n-min <= n-max <= 64')
    _require(args.tol > 0, '--tol must be positive')
    reports = [run_verification(n, args.tol)
               for n in range(args.n_min, args.n_max + 1)]
    _write(dumps([report_to_obj(r) for r in reports]) + '\n', args.json_path)
    return 0 if all(r.all_passed() for r in reports) else 1


def _cmd_export(args) -> int:
    n = args.n
    _require(n >= 2, '--n must be at least 2')
    what = args.what
    if what in ('S', 'M'):
        payload = matrix_to_obj(shift_clock(n)[0 if what == 'S' else 1])
    elif what in ('piS', 'piM'):
        payload = matrix_to_obj(rep_generators(n)[0 if what == 'piS' else 1])
    elif what == 'basis':
        basis = entangled_basis(n)
        payload = [matrix_to_obj(basis.vector(k, j))
                   for k in range(n) for j in range(n)]
    elif what == 'Q':
        _require(args.s is not None and 0 <= args.s < n,
                 '--s is required for Q and must lie in 0..n-1')
        payload = matrix_to_obj(q_projection(n, args.s))
    elif what == 'P':
        _require(args.k is not None and 0 <= args.k < n,
                 '--k is required for P and must lie in 0..n-1')
        payload = matrix_to_obj(anticlique_projector(n, args.k))
    elif what == 'h-generators':
        payload = [matrix_to_obj(h) for h in h_generators(n)]
    else:  # z-generators: the reduced j-free family
        payload = [matrix_to_obj(z) for z in z_generators(n, 0)[1]]
    _write(dumps(payload) + '\n', args.out)
    return 0


def _cmd_kl_check(args) -> int:
    n = args.n
    _require(n >= 2, '--n must be at least 2')
    _require(0 <= args.k < n, '--k must lie in 0..n-1')
    _require(0 <= args.s < n, '--s must lie in 0..n-1')
    _require(args.tol > 0, '--tol must be positive')
    unitaries = element_unitaries(n, *rep_generators(n))
    orbit = graph_orbit(n, args.s, args.tol, unitaries)
    labeled = [((g.p, g.q), m) for g, m in orbit.provenance]
    projector = anticlique_projector(n, args.k)
    result = check_knill_laflamme(labeled, projector, args.tol,
                                  n=n, k=args.k, s=args.s)
    _write(dumps(anticlique_to_obj(result)) + '\n', args.json_path)
    return 0 if result.is_anticlique else 1


if __name__ == '__main__':
    sys.exit(main())
