"""Command-line front end: ``posetval COMMAND ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import List, Optional, Sequence

from . import io
from .cones import ROOT, WT, alternating_chi_check, is_simplicial, root_cone, wt_cone
from .errors import InputError, PosetvalError
from .poset import (
    SkewDiagram,
    biconnected_components,
    bounded_regions,
    circuits,
    find_notches,
    has_acyclic_hasse,
    is_forest,
    lattice_paths,
    skew_poset,
)
from .valuations import (
    circuit_binomial,
    hilb_complete_intersection,
    hilb_notch_comparison,
    hilb_root,
    hilb_strict,
    hilb_wt,
    hook_data,
    main_transformation,
    notch_comparison,
    phi_direct,
    planar_relation_degrees,
    psi_direct,
    psi_from_blocks,
    psi_planar,
    psi_skew,
    psi_unicyclic,
    qhook_check,
    skew_names,
    total_residue_check,
    unicyclic_relation_degrees,
)

VERIFY_TARGETS = ("notch", "biconnected", "planar", "unicyclic", "skew", "maintrans", "residue", "cyclic")


class VerificationFailed(Exception):
    """Raised with the lines describing the first counterexample."""

    def __init__(self, lines: Sequence[str]):
        super().__init__("\n".join(lines))
        self.lines = list(lines)


def _plural(k: int, word: str, plural: Optional[str] = None) -> str:
    return f"{k} {word}" if k == 1 else f"{k} {plural or word + 's'}"


def _yes(flag) -> str:
    if flag is None:
        return "-"
    return "yes" if flag else "no"


def _value(f, fmt: str, names=None) -> str:
    if fmt == "structured":
        return io.to_structured(f, names).rstrip("\n")
    return f.render(names)


def _qpoly(coeffs) -> str:
    parts = []
    for e, c in sorted(coeffs.items()):
        if not c:
            continue
        mono = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
        body = mono if c == 1 else (str(c) if e == 0 else f"{c}*{mono}")
        parts.append(body)
    return "+".join(parts) if parts else "0"


def _check(holds: bool, lines: Sequence[str]) -> None:
    if not holds:
        raise VerificationFailed(lines)


# -- commands ------------------------------------------------------------------


def cmd_psi(args) -> List[str]:
    P, _ = io.read_poset(args.file)
    return [_value(psi_direct(P), args.format)]


def cmd_phi(args) -> List[str]:
    P, _ = io.read_poset(args.file)
    return [_value(phi_direct(P), args.format)]


def cmd_hilbert(args) -> List[str]:
    P, _ = io.read_poset(args.file)
    fn = {"root": hilb_root, "wt": hilb_wt, "strict": hilb_strict}[args.cone]
    return [_value(fn(P), args.format)]


def cmd_rays(args) -> List[str]:
    P, _ = io.read_poset(args.file)
    K = root_cone(P) if args.cone == ROOT else wt_cone(P)
    if args.format == "structured":
        return [f"lattice {K.lattice}", f"dim {K.dim}"] + ["ray " + " ".join(map(str, r)) for r in K.rays]
    return ["(" + ",".join(map(str, r)) + ")" for r in K.rays]


def cmd_info(args) -> List[str]:
    P, emb = io.read_poset(args.file)
    root_s, root_u = is_simplicial(root_cone(P))
    wt_s, wt_u = is_simplicial(wt_cone(P))
    cs = circuits(P)
    rows = [
        ("elements", str(P.n)),
        ("covers", str(len(P.covers))),
        ("connected", _yes(P.is_connected())),
        ("forest", _yes(is_forest(P))),
        ("acyclic-hasse", _yes(has_acyclic_hasse(P))),
        ("circuits", str(len(cs))),
    ]
    rows += [("circuit", " ".join(map(str, C.vertices))) for C in cs]
    rows += [
        ("blocks", str(len(biconnected_components(P)))),
        ("notches", str(len(find_notches(P)))),
        ("root-simplicial", _yes(root_s)),
        ("root-unimodular", _yes(root_u)),
        ("wt-simplicial", _yes(wt_s)),
        ("wt-unimodular", _yes(wt_u)),
    ]
    if emb is not None:
        rows.append(("regions", str(len(bounded_regions(P, emb)))))
    sep = " " if args.format == "structured" else ": "
    return [f"{k}{sep}{v}" for k, v in rows]


def cmd_skew(args) -> List[str]:
    D = SkewDiagram(io.parse_partition(args.lam), io.parse_partition(args.mu) if args.mu else ())
    return [_value(psi_skew(D), args.format, skew_names(D))]


def cmd_qhook(args) -> List[str]:
    P, _ = io.read_poset(args.file)
    data = hook_data(P)
    res = qhook_check(P)
    sep = " " if args.format == "structured" else ": "
    lines = [
        f"maj{sep}{data.maj}",
        f"hooks{sep}" + " ".join(str(data.hooks[i]) for i in P.elements),
        f"direct{sep}{_qpoly(res.direct)}",
        f"product{sep}{_qpoly(res.product) if res.product is not None else 'not a polynomial'}",
    ]
    _check(res.holds, lines + ["q-hook formula FAILS"])
    return lines + ["q-hook formula holds"]


# -- verification ---------------------------------------------------------------


def _verify_notch(P, emb, args) -> str:
    notches = find_notches(P)
    if not notches:
        raise InputError("poset has no notch")
    for notch in notches:
        for label, cmp in (("Psi", notch_comparison(P, notch)), ("H(root)", hilb_notch_comparison(P, notch))):
            _check(cmp.holds, [
                f"notch ({notch.a},{notch.b},{notch.c}) {notch.shape}",
                "closed covers " + " ".join(f"{i}<{j}" for i, j in cmp.closed.covers),
                f"{label} of closed poset: {cmp.lhs.render()}",
                f"transformed {label}: {cmp.rhs.render()}",
            ])
    return f"{_plural(len(notches), 'notch', 'notches')} checked, identity holds"


def _verify_biconnected(P, emb, args) -> str:
    lhs, rhs = psi_direct(P), psi_from_blocks(P)
    _check(lhs == rhs, [f"Psi: {lhs.render()}", f"product over blocks: {rhs.render()}"])
    return f"{_plural(len(biconnected_components(P)), 'block')}, product identity holds"


def _verify_planar(P, emb, args) -> str:
    if emb is None:
        raise InputError("verify planar needs an embedding section in the poset file")
    regions = bounded_regions(P, emb)
    lhs, rhs = psi_direct(P), psi_planar(P, emb)
    _check(lhs == rhs, [f"Psi: {lhs.render()}", f"region product: {rhs.render()}"])
    if P.is_connected():
        h, ci = hilb_root(P), hilb_complete_intersection(P, planar_relation_degrees(P, emb))
        _check(h == ci, [f"H(root): {h.render()}", f"complete intersection: {ci.render()}"])
    return f"{_plural(len(regions), 'region')}, identity holds"


def _verify_unicyclic(P, emb, args) -> str:
    lhs, rhs = psi_direct(P), psi_unicyclic(P)
    _check(lhs == rhs, [f"Psi: {lhs.render()}", f"unicyclic formula: {rhs.render()}"])
    h, ci = hilb_root(P), hilb_complete_intersection(P, unicyclic_relation_degrees(P))
    _check(h == ci, [f"H(root): {h.render()}", f"complete intersection: {ci.render()}"])
    return f"binomial {circuit_binomial(circuits(P)[0]).render()}, identity holds"


def _verify_skew(D, args) -> str:
    names = skew_names(D)
    lhs, rhs = psi_direct(skew_poset(D)), psi_skew(D)
    _check(lhs == rhs, [f"Psi: {lhs.render(names)}", f"lattice-path sum: {rhs.render(names)}"])
    return f"{_plural(len(lattice_paths(D)), 'lattice path')}, identity holds"


def _verify_maintrans(P, emb, args) -> str:
    cs = circuits(P)
    if not cs:
        raise InputError("poset has no circuit")
    for C in cs:
        res = main_transformation(P, C)
        lines = [f"circuit {' '.join(map(str, C.vertices))}"]
        for E, term in res.terms:
            removed = " ".join(f"{i}<{j}" for i, j in E) or "none"
            lines.append(f"removed {removed}: {term.render()}")
        lines.append(f"sum: {res.total.render()}")
        _check(res.holds, lines)
    return f"{_plural(len(cs), 'circuit')} checked, identity holds"


def _verify_residue(P, emb, args) -> str:
    cones = ["wt"]
    if P.is_connected():
        cones.insert(0, "root")
    for cone in cones:
        _check(total_residue_check(P, cone), [f"total residue of H({cone}) differs from s({cone})"])
    return f"{' and '.join(cones)} residues recover the valuations"


def cyclic_samples(W, V, count: int, rng: random.Random) -> List[tuple]:
    """Sample points: half nonnegative integer combinations of W and V, half random points."""
    gens = list(W) + list(V)
    d = len(gens[0])
    out = []
    for k in range(count):
        if k % 2 == 0:
            p = [0] * d
            for g in gens:
                c = rng.randint(0, 3)
                p = [a + c * b for a, b in zip(p, g)]
        else:
            p = [rng.randint(-4, 4) for _ in range(d)]
        out.append(tuple(p))
    return out


def circuit_vectors(P, C):
    """W from the with-edges of C and V from the other covers, as root vectors."""
    def e(i, j):
        v = [0] * P.n
        v[i - 1] += 1
        v[j - 1] -= 1
        return tuple(v)

    W = [e(i, j) for i, j in C.with_edges]
    V = [e(i, j) for i, j in P.covers if (i, j) not in set(C.with_edges)]
    return W, V


def _verify_cyclic(P, emb, args) -> str:
    cs = circuits(P)
    if not cs:
        raise InputError("poset has no circuit")
    rng = random.Random(args.seed)
    for C in cs:
        W, V = circuit_vectors(P, C)
        samples = cyclic_samples(W, V, args.samples, rng)
        _check(alternating_chi_check(W, V, samples), [
            f"circuit {' '.join(map(str, C.vertices))}",
            "W " + " ".join(str(w) for w in W),
            "V " + " ".join(str(v) for v in V),
        ])
    return f"{_plural(len(cs), 'circuit')} checked at {args.samples} points each, identity holds"


def cmd_verify(args) -> List[str]:
    if args.target == "skew":
        return [_verify_skew(io.read_skew(args.file), args)]
    P, emb = io.read_poset(args.file)
    fn = {
        "notch": _verify_notch,
        "biconnected": _verify_biconnected,
        "planar": _verify_planar,
        "unicyclic": _verify_unicyclic,
        "maintrans": _verify_maintrans,
        "residue": _verify_residue,
        "cyclic": _verify_cyclic,
    }[args.target]
    return [fn(P, emb, args)]


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetval", description="Exact valuations and Hilbert series of posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file=True):
        p = sub.add_parser(name, help=help_text)
        if file:
            p.add_argument("file", help="poset file")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.set_defaults(func=func)
        return p

    add("psi", cmd_psi, "Psi_P by the definitional sum")
    add("phi", cmd_phi, "Phi_P by the definitional sum")
    p = add("hilbert", cmd_hilbert, "Hilbert series of a cone of P")
    p.add_argument("--cone", choices=("root", "wt", "strict"), required=True)
    p = add("rays", cmd_rays, "extreme rays of a cone of P")
    p.add_argument("--cone", choices=(ROOT, WT), required=True)
    add("info", cmd_info, "structural flags of P")
    p = add("skew", cmd_skew, "Psi of a skew diagram by lattice paths", file=False)
    p.add_argument("--lambda", dest="lam", required=True, help="outer partition, e.g. 4,4,2")
    p.add_argument("--mu", default="", help="inner partition, e.g. 1,1")
    add("qhook", cmd_qhook, "maj generating function against the q-hook product (forests)")
    p = sub.add_parser("verify", help="check an identity on the given poset")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.add_argument("file", help="poset file (skew-diagram file for 'skew')")
    p.add_argument("--samples", type=int, default=100, help="sample points for 'cyclic'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    if getattr(args, "samples", 1) < 1:
        print("posetval: error: --samples must be positive", file=err)
        return 2
    try:
        lines = args.func(args)
    except VerificationFailed as exc:
        print("verification FAILED; first counterexample:", file=out)
        for line in exc.lines:
            print(f"  {line}", file=out)
        return 1
    except (PosetvalError, OSError) as exc:
        print(f"posetval: error: {exc}", file=err)
        return 2
    for line in lines:
        print(line, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
