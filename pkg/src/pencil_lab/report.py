"""JSON and text report schema ("pencil-lab/1").

Every number serializes as an exact decimal string of an integer or
num/den pair; member lists are sorted by (minimal-polynomial degree,
coefficients, refined box midpoint) so reports are byte-stable.
"""

import json
from fractions import Fraction

from .kernel.algebraic import AlgebraicSet
from .kernel.bipoly import BivariatePolynomial
from .kernel.fields import QQ
from .parser import unparse

SCHEMA = "pencil-lab/1"


def frac_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def poly_to_json(poly):
    terms = sorted(poly.terms.items(), key=lambda t: (t[0][0], t[0][1]))
    return {
        "vars": list(poly.vars),
        "terms": [[[a, b], frac_str(c)] for (a, b), c in terms],
    }


def poly_from_json(obj):
    terms = {}
    for (e, cs) in obj["terms"]:
        terms[(int(e[0]), int(e[1]))] = Fraction(cs)
    return BivariatePolynomial(terms, QQ, tuple(obj.get("vars", ("X", "Y"))))


def algnum_to_json(alg, digits=12):
    a = alg.refined(Fraction(1, 10**digits)) if not alg.is_rational() else alg
    box = a.box
    out = {
        "minpoly": list(a.minpoly),
        "box": [frac_str(v) for v in box.as_tuple()],
        "rational": frac_str(a.rational_value()) if a.is_rational() else None,
    }
    re, im = a.approx(8)
    out["approx"] = [re, im]
    return out


def set_block(aset, extra_member_keys=()):
    if aset is None:
        return None
    members = []
    for mp, _ in aset.factors:
        ann = aset.annotation_for(mp)
        payload = {k: _jsonable(v) for k, v in sorted(ann.items())}
        sub = AlgebraicSet([(mp, None)])
        for m in sub.members():
            members.append(
                {"value": algnum_to_json(m), "annotations": payload}
            )
    members.sort(key=lambda m: (len(m["value"]["minpoly"]), m["value"]["minpoly"], m["value"]["approx"]))
    defining = aset.defining_polynomial()
    return {
        "cardinality": len(aset),
        "defining": [frac_str(c) for c in defining.coeffs],
        "members": members,
    }


def _jsonable(v):
    if isinstance(v, Fraction):
        return frac_str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def build_report(pencil, set_report=None, rank_report=None, timing=None,
                 input_text=None):
    doc = {
        "schema": SCHEMA,
        "input": {
            "f": input_text.get("f") if input_text else None,
            "w": input_text.get("w") if input_text else None,
            "normalized": {
                "f": poly_to_json(pencil.f),
                "w": poly_to_json(pencil.w) if pencil.w is not None else None,
                "shear": pencil.shear,
                "fiber_replacement": (
                    frac_str(pencil.replacement[0]) if pencil.replacement else None
                ),
            },
        },
    }
    if set_report is not None:
        comp = set_report.composite
        doc["sets"] = {
            "singset": set_block(set_report.singset),
            "multset": set_block(set_report.multset),
            "multset_plus_infinite": set_report.multset_plus_infinite,
            "redset": set_block(set_report.redset),
            "redset_plus_infinite": set_report.redset_plus_infinite,
            "primset": set_block(set_report.primset),
            "primset_plus_infinite": set_report.primset_plus_infinite,
            "uniset": set_block(set_report.uniset),
            "uniset_plus_infinite": set_report.uniset_plus_infinite,
        }
        doc["composite"] = (
            {
                "flag": comp.composite,
                "generic_count": comp.generic_count,
            }
            if comp is not None
            else None
        )
        doc["checks"] = {
            "multiple_factor_product_identity": set_report.product_identity_ok,
            **{k: _jsonable(v) for k, v in sorted(set_report.bound_checks.items())},
        }
    if rank_report is not None:
        doc["rank"] = {
            "N": rank_report.N,
            "rho_a": rank_report.rho_a,
            "rho_pi": rank_report.rho_pi,
            "points_at_infinity": rank_report.vinf,
            "defset": set_block(rank_report.defset),
            "zeta": rank_report.zeta,
            "jungian_residual": rank_report.jungian_residual,
            "bounds": {k: _jsonable(v) for k, v in sorted(rank_report.bound_checks.items())},
        }
    if timing:
        doc["timing"] = timing
    return doc


def render_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True)


def _fmt_members(block):
    if block is None:
        return "(not computed)"
    vals = []
    for m in block["members"]:
        v = m["value"]
        if v["rational"] is not None:
            vals.append(v["rational"])
        else:
            re, im = v["approx"]
            vals.append("root(%s)~(%g%+gi)" % (",".join(map(str, v["minpoly"])), re, im))
    return "{%s}" % ", ".join(vals)


def render_text(doc):
    lines = []
    lines.append("pencil-lab report (%s)" % doc["schema"])
    inp = doc["input"]
    if inp.get("f"):
        lines.append("f = %s" % inp["f"])
    if inp.get("w"):
        lines.append("w = %s" % inp["w"])
    if "sets" in doc:
        s = doc["sets"]
        if doc.get("composite") and doc["composite"]["flag"]:
            lines.append(
                "composite pencil: generic member splits into %d factors; "
                "every member is reducible" % doc["composite"]["generic_count"]
            )
        for name in ("singset", "multset", "redset", "primset", "uniset"):
            block = s.get(name)
            suffix = ""
            plus = s.get(name + "_plus_infinite")
            if plus:
                suffix = "  (+ the member at infinity)"
            if block is not None:
                lines.append("%s(f%s) = %s%s" % (
                    name, ", w" if inp.get("w") else "", _fmt_members(block), suffix))
    if "rank" in doc:
        r = doc["rank"]
        lines.append("N = %d   rho_a = %d   rho_pi = %d" % (r["N"], r["rho_a"], r["rho_pi"]))
        lines.append("defset = %s" % _fmt_members(r["defset"]))
        lines.append("zeta = %d   jungian residual = %d" % (r["zeta"], r["jungian_residual"]))
    return "\n".join(lines) + "\n"
