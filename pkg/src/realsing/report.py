"""Serialization of analyses: JSON records, text reports and CSV rows.

JSON output never contains a JSON number: integers are decimal strings and
rationals are ``{"num": ..., "den": ...}`` objects, so arbitrarily large
values survive any consumer unchanged.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .analysis import Analysis
from .plumbing import vertex_label

CSV_COLUMNS = (
    "p", "q", "r", "delta", "a", "b", "genus", "e0", "node_weight", "det",
    "K_integral", "predicted_integral", "agree", "congruence_value",
)


def encode(obj):
    """Recursively convert exact values into JSON-safe structures."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def ratstr(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def yes(flag: bool) -> str:
    return "yes" if flag else "no"


def record(a: Analysis, conventions: tuple[str, ...] = ("paper",)) -> dict:
    fp, sd, g = a.params, a.seifert, a.graph
    canon = {
        c: {
            "d": list(rep.d),
            "k": list(rep.k),
            "k_squared": rep.k_squared,
            "integral": rep.integral,
            "classification": rep.classification,
            "method": rep.method,
        }
        for c, rep in a.canonical.items()
        if c in conventions
    }
    cong = a.congruence
    return encode({
        "params": {"p": fp.p, "q": fp.q, "r": fp.r, "delta": fp.delta, "a": fp.a, "b": fp.b},
        "seifert": {
            "genus": sd.genus,
            "e0": sd.e0,
            "pairs": [{"alpha": al, "beta": be} for al, be in sd.pairs],
        },
        "plumbing": {
            "vertices": [
                {"id": v.id, "name": v.name, "weight": v.weight, "genus": v.genus,
                 "role": v.role, "arm": v.arm, "position": v.position}
                for v in g.vertices
            ],
            "edges": [list(e) for e in g.edges],
        },
        "determinant": a.determinant,
        "negative_definite": a.negative_definite,
        "splice": {
            "weights": [
                {"edge": [u, v], "weight_at_u": wu, "weight_at_v": wv,
                 "edge_determinant": a.edge_dets[(u, v)]}
                for u, v, wu, wv in a.diagram.edge_weights()
            ],
        },
        "chi_resolution": dict(a.chi_res),
        "canonical": canon,
        "verdict": {
            "computed_integral": a.verdict.computed_integral,
            "predicted_integral": a.verdict.predicted_integral,
            "agree": a.verdict.agree,
            "subcase": a.verdict.subcase,
        },
        "chi_fibre": a.chi_fibre,
        "congruence": None if not cong.applicable else {
            "chi_resolution": cong.chi_resolution,
            "k_squared": cong.k_squared,
            "chi_fibre": cong.chi_fibre,
            "value": cong.value,
            "obstructed": cong.obstructed,
        },
    })


def to_json(a: Analysis, conventions: tuple[str, ...] = ("paper",)) -> str:
    return json.dumps(record(a, conventions), sort_keys=True, indent=2) + "\n"


def to_text(a: Analysis, convention: str = "paper") -> str:
    fp, sd, g = a.params, a.seifert, a.graph
    rep = a.canonical[convention]
    pairs = " ".join(f"({al},{be})" for al, be in sd.pairs)
    lines = [
        f"F = conj(xy)(x^{fp.p} + y^{fp.q}) + z^{fp.r}",
        f"parameters: p={fp.p} q={fp.q} r={fp.r}  delta={fp.delta} a={fp.a} b={fp.b}",
        f"seifert: genus={sd.genus} e0={ratstr(sd.e0)} pairs={pairs}",
        f"plumbing: {len(g)} vertices, {len(g.edges)} edges",
    ]
    for v in g.vertices:
        lines.append(f"  {v.name:<8} {vertex_label(v):>8}  {v.role}")
    lines += [
        f"det={a.determinant} (a^2 delta = {fp.a ** 2 * fp.delta})",
        f"negative definite: {yes(a.negative_definite)}",
        "splice weights (u -- v: w_u, w_v; edge det):",
    ]
    for u, v, wu, wv in a.diagram.edge_weights():
        lines.append(f"  {g.vertices[u].name} -- {g.vertices[v].name}: {wu}, {wv}; "
                     f"{a.edge_dets[(u, v)]}")
    lines += [
        f"chi(resolution): paper={a.chi_res['paper']} genus={a.chi_res['genus']}",
        f"canonical class [{convention} chi]:",
        "  d = (" + ", ".join(ratstr(x) for x in rep.d) + ")",
        "  k = (" + ", ".join(ratstr(x) for x in rep.k) + ")",
        f"  K^2 = {ratstr(rep.k_squared)}",
        f"K integral: {yes(rep.integral)} ({rep.classification})",
        f"theorem [paper chi]: subcase {a.verdict.subcase}, predicted integral: "
        f"{yes(a.verdict.predicted_integral)}, agree: {yes(a.verdict.agree)}",
        f"chi(Milnor fibre) = {a.chi_fibre}",
    ]
    cong = a.congruence
    if cong.applicable:
        state = "obstructed" if cong.obstructed else "not obstructed"
        lines.append(f"congruence value: {cong.value} ({state})")
    else:
        lines.append("congruence value: n/a (requires a=2)")
    return "\n".join(lines) + "\n"


def csv_row(a: Analysis) -> list[str]:
    fp, sd = a.params, a.seifert
    rep = a.canonical["paper"]
    cong = a.congruence
    return [
        str(fp.p), str(fp.q), str(fp.r), str(fp.delta), str(fp.a), str(fp.b),
        str(sd.genus), f"{sd.e0.numerator}/{sd.e0.denominator}", str(a.node_weight),
        str(a.determinant), str(rep.integral).lower(),
        str(a.verdict.predicted_integral).lower(), str(a.verdict.agree).lower(),
        "" if cong.value is None else str(cong.value),
    ]
