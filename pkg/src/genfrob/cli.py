"""Command-line front end.

Deterministic text/JSON/DOT output for the basis, ideal, ball, module,
poset, frobenius, sequence, and verify commands. Exit codes: 0 success,
2 invalid input, 3 verification mismatch, 4 arithmetic overflow.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .counting import m_value
from .frobenius import brute_force_frobenius, frobenius, sequence_report
from .ideal import lattice_ideal
from .lattice import InputError, LatticeBasis, WeightVector, kernel_basis, sublattice_index
from .modules import classify, minimal_generators, render_monomial
from .neighbourhood import ball, moves
from .poset import module_poset, poset_to_dot, structure_poset

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFY_MISMATCH = 3
EXIT_OVERFLOW = 4


def _parse_weights(text: str) -> WeightVector:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse weights {text!r}") from exc
    return WeightVector(parts)


def _read_basis_file(path: str, weight: WeightVector) -> LatticeBasis:
    vectors = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                vectors.append(tuple(int(x) for x in line.split()))
    except OSError as exc:
        raise InputError(f"cannot read basis file {path}: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"bad integer in basis file {path}") from exc
    return LatticeBasis(weight, tuple(vectors))


def _make_basis(args) -> LatticeBasis:
    weight = _parse_weights(args.weights)
    if args.basis:
        return _read_basis_file(args.basis, weight)
    return kernel_basis(weight)


def _label_list(c) -> list:
    return [c.degree, *c.torsion]


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_basis(args) -> int:
    basis = _make_basis(args)
    payload = {
        "a": list(basis.weight.a),
        "vectors": [list(v) for v in basis.vectors],
        "index": sublattice_index(basis),
    }
    if args.format == "json":
        _emit(args, _json_dump(payload))
    else:
        lines = [f"weights: {basis.weight.a}", f"index: {payload['index']}"]
        lines += [f"basis vector: {v}" for v in basis.vectors]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_ideal(args) -> int:
    basis = _make_basis(args)
    mb = lattice_ideal(basis)
    rendered = [
        f"{render_monomial(b.head)} - {render_monomial(b.tail)}" for b in mb.elements
    ]
    payload = {
        "a": list(basis.weight.a),
        "generators": rendered,
        "vectors": [list(b.vector) for b in mb.elements],
    }
    if args.format == "json":
        _emit(args, _json_dump(payload))
    else:
        _emit(args, "\n".join(rendered) + "\n")
    return EXIT_OK


def _cmd_ball(args) -> int:
    basis = _make_basis(args)
    bl = ball(moves(lattice_ideal(basis)), args.k)
    payload = {
        "a": list(basis.weight.a),
        "k": args.k,
        "points": [list(p) for p in bl.points],
    }
    if args.format == "json":
        _emit(args, _json_dump(payload))
    else:
        _emit(args, "\n".join(str(p) for p in bl.points) + "\n")
    return EXIT_OK


def _cmd_module(args) -> int:
    basis = _make_basis(args)
    gens = minimal_generators(basis, args.k)
    fk = frobenius(basis, args.k)
    classification = []
    if args.k >= 2:
        for g in gens.generators:
            c = classify(basis, g, args.k, gens)
            classification.append(
                {
                    "generator": render_monomial(g),
                    "case": c.case,
                    "witnesses": [render_monomial(w) for w in c.witnesses],
                }
            )
    payload = {
        "a": list(basis.weight.a),
        "k": args.k,
        "generators": list(gens.render()),
        "supports": [[list(p) for p in sup] for sup in gens.supports],
        "m_k": gens.m_k,
        "F_k": fk,
        "b": fk - gens.m_k,
        "classification": classification,
    }
    if args.format == "json":
        _emit(args, _json_dump(payload))
    else:
        lines = [f"m_k: {gens.m_k}", f"F_k: {fk}", f"b: {fk - gens.m_k}"]
        for i, g in enumerate(gens.render()):
            lines.append(f"generator: {g} support: {list(gens.supports[i])}")
        for entry in classification:
            lines.append(
                f"classify {entry['generator']}: {entry['case']} "
                f"witnesses {entry['witnesses']}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_poset(args) -> int:
    basis = _make_basis(args)
    sp = structure_poset(basis)
    if args.format == "dot":
        _emit(args, poset_to_dot(sp))
        return EXIT_OK
    if args.k is not None:
        mp = module_poset(basis, args.k)
        labels = sorted(mp.labels, key=lambda c: (c.degree, c.torsion))
        payload = {
            "a": list(basis.weight.a),
            "k": args.k,
            "poset": {
                "labels": [_label_list(c) for c in labels],
                "hasse": [
                    [_label_list(u), _label_list(v)] for u, v in mp.covers
                ],
            },
            "minimal": [
                _label_list(c)
                for c in sorted(mp.minimal_elements, key=lambda c: (c.degree, c.torsion))
            ],
            "m_k": mp.m_k,
        }
    else:
        payload = {
            "a": list(basis.weight.a),
            "k": None,
            "poset": {
                "labels": [_label_list(c) for c in sp.elements],
                "hasse": [
                    [_label_list(u), _label_list(v)] for u, v in sp.covers
                ],
            },
        }
    if args.format == "json":
        _emit(args, _json_dump(payload))
    else:
        lines = [f"labels: {payload['poset']['labels']}"]
        if payload["poset"]["hasse"]:
            lines += [f"cover: {u} < {v}" for u, v in payload["poset"]["hasse"]]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_frobenius(args) -> int:
    basis = _make_basis(args)
    cap = os.environ.get("GENFROB_DEGREE_CAP")
    degree_cap = int(cap) if cap else None
    fk = frobenius(basis, args.k, degree_cap=degree_cap)
    if args.format == "json":
        mk = m_value(basis, args.k)
        payload = {
            "a": list(basis.weight.a),
            "k": args.k,
            "m_k": mk,
            "F_k": fk,
            "b": fk - mk,
        }
        _emit(args, _json_dump(payload))
    else:
        _emit(args, f"{fk}\n")
    return EXIT_OK


def _cmd_sequence(args) -> int:
    basis = _make_basis(args)
    rep = sequence_report(basis, args.k_max)
    payload = {
        "a": list(basis.weight.a),
        "k_max": rep.k_max,
        "f_values": list(rep.f_values),
        "m_values": list(rep.m_values),
        "b_values": list(rep.b_values),
        "f_diffs": list(rep.f_diffs),
        "m_diffs": list(rep.m_diffs),
        "dimension": rep.dimension,
        "bound_checks": rep.bound_checks,
    }
    if args.format == "json":
        _emit(args, _json_dump(payload))
    else:
        lines = [
            f"k={k} m_k={m} F_k={f} b={b}"
            for k, (m, f, b) in enumerate(
                zip(rep.m_values, rep.f_values, rep.b_values), start=1
            )
        ]
        lines.append(f"dimension: {rep.dimension}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    basis = _make_basis(args)
    lines = []
    ok = True
    for k in range(1, args.k_max + 1):
        fk = frobenius(basis, k)
        oracle = brute_force_frobenius(basis, k)
        match = fk == oracle
        ok = ok and match
        lines.append(f"k={k} pipeline F_k={fk} oracle F_k={oracle} "
                     f"{'ok' if match else 'MISMATCH'}")
        gens = minimal_generators(basis, k)
        mp = module_poset(basis, k)
        match2 = len(gens.generators) == len(mp.minimal_elements)
        ok = ok and match2
        lines.append(
            f"k={k} generator orbits={len(gens.generators)} "
            f"poset minimal elements={len(mp.minimal_elements)} "
            f"{'ok' if match2 else 'MISMATCH'}"
        )
        match3 = fk - gens.m_k == fk - mp.m_k and gens.m_k == mp.m_k
        ok = ok and match3
        lines.append(
            f"k={k} m_k module={gens.m_k} poset={mp.m_k} "
            f"{'ok' if match3 else 'MISMATCH'}"
        )
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_VERIFY_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genfrob",
        description="Generalised Frobenius numbers, lattice ideals, "
        "lattice modules, and structure posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k=False, k_max=False, formats=("text", "json")):
        p.add_argument("-a", "--weights", required=True, help="weights, e.g. 3,5,8")
        p.add_argument("--basis", help="file with one basis vector per line")
        p.add_argument("-o", "--output", help="write output to this path")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads (output is identical for any value)")
        p.add_argument("--format", choices=formats, default="text")
        if k:
            p.add_argument("-k", type=int, default=1)
        if k_max:
            p.add_argument("--k-max", dest="k_max", type=int, default=4)

    common(sub.add_parser("basis", help="kernel or sublattice basis and index"))
    common(sub.add_parser("ideal", help="minimal Markov basis of the lattice ideal"))
    common(sub.add_parser("ball", help="radius-k ball in the move graph"), k=True)
    common(sub.add_parser("module", help="minimal generators of the k-th module"), k=True)
    p = sub.add_parser("poset", help="structure poset, or module poset with -k")
    common(p, formats=("text", "json", "dot"))
    p.add_argument("-k", type=int, default=None)
    common(sub.add_parser("frobenius", help="k-th Frobenius number"), k=True)
    common(sub.add_parser("sequence", help="F/m/b sequence report"), k_max=True)
    common(sub.add_parser("verify", help="pipeline against the counting oracle"),
           k_max=True)
    return parser


_COMMANDS = {
    "basis": _cmd_basis,
    "ideal": _cmd_ideal,
    "ball": _cmd_ball,
    "module": _cmd_module,
    "poset": _cmd_poset,
    "frobenius": _cmd_frobenius,
    "sequence": _cmd_sequence,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
