"""End-to-end analysis: parse -> decone -> shear -> sweep presentation ->
cyclic-cover complex -> integer homology -> bounds -> verdicts.

This is the single entry point shared by the command line and the
self-validation corpus, so every run performs (and records) the same
consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds as bounds_mod
from . import cover as cover_mod
from . import geometry
from . import presentation as presentation_mod
from . import snf

DEFAULT_PRIMES = (2, 3, 5, 7, 11)


def probe_primes(n, incidence, extra=()):
    """Default torsion probes: 2,3,5,7,11 plus every prime dividing the
    cover degree or a point multiplicity."""
    ps = set(DEFAULT_PRIMES) | set(extra)
    ps.update(snf.prime_factors(n))
    for pt in incidence.points:
        ps.update(snf.prime_factors(pt.multiplicity))
    return tuple(sorted(ps))


@dataclass(frozen=True)
class Analysis:
    """Everything computed for one arrangement."""

    mode: str  # 'projective' or 'affine'
    proj: geometry.Arrangement
    aff: geometry.AffineArrangement  # sweep-ready decone
    infinity_index: int
    n: int  # cover degree actually analyzed
    milnor: bool  # True unless a modulus override changed the cover degree
    incidence: geometry.IncidenceData  # of the projective arrangement
    presentation: presentation_mod.Presentation
    complex: cover_mod.CoverComplex
    homology: cover_mod.CoverHomology
    primes: tuple
    bound_report: object  # BoundReport or None (modulus override)
    prediction: object  # Prediction or None
    verdicts: dict
    notes: tuple

    @property
    def h1(self):
        return self.homology.group

    @property
    def all_verdicts_pass(self):
        return all(self.verdicts.values())


def _is_generic_triangle(incidence):
    return incidence.n_lines == 3 and incidence.multiplicity_census() == {2: 3}


def _verdicts(analysis_n, full_degree, hom, report, prediction, complex_, primes):
    v = {}
    v["chain_condition"] = complex_.chain_ok()
    v["connected_cover"] = hom.b0 == 1
    v["euler_identity"] = hom.euler_ok()
    if report is not None:
        upper = report.upper_bound
        v["rank_lower_bound"] = hom.b1 >= full_degree - 1
        v["rank_upper_bound"] = hom.b1 <= upper
        v["modular_upper_bound"] = all(hom.betti_mod[p] <= upper for p in primes)
        v["torsion_consistency"] = all(
            (any(t % p == 0 for t in hom.group.torsion)) == (hom.betti_mod[p] > hom.b1)
            for p in primes
        )
        if prediction is not None and prediction.exact is not None:
            v["exact_prediction"] = hom.group == prediction.exact
    return v


def analyze(arr, infinity_index=None, primes=None, modulus=None):
    """Run the full pipeline on a parsed arrangement.

    ``infinity_index`` picks the line sent to infinity (projective input
    only; default: the last line).  ``modulus`` analyzes the Z/m quotient
    cover instead of the full Milnor-fiber cover; combinatorial bounds are
    about the full cover, so they are skipped in that case.
    """
    if isinstance(arr, geometry.AffineArrangement):
        mode = "affine"
        aff0 = arr
        proj = geometry.cone(arr)
        infinity_index = proj.n_lines - 1
    elif isinstance(arr, geometry.Arrangement):
        mode = "projective"
        if infinity_index is None:
            infinity_index = arr.n_lines - 1
        proj = arr
        aff0 = geometry.decone(arr, infinity_index)
    else:
        raise TypeError(f"cannot analyze {type(arr).__name__}")
    if modulus is not None and modulus < 1:
        raise geometry.InputError(f"modulus must be a positive integer, got {modulus}")
    full_degree = proj.n_lines
    aff = geometry.shear_to_generic(aff0)
    pres = presentation_mod.free_reduce_and_strip(presentation_mod.arvola_randell(aff))
    complex_ = cover_mod.build_cover_complex(pres, modulus=modulus)
    n = complex_.n
    milnor = n == full_degree
    incidence = geometry.intersection_points(proj)
    if primes is None:
        primes = probe_primes(full_degree, incidence)
    else:
        primes = tuple(sorted(set(primes)))
    hom = cover_mod.h1_of_cover(complex_, primes=primes)
    notes = []
    if milnor:
        report = bounds_mod.bound_report(incidence, full_degree, aff=aff)
        prediction = bounds_mod.Prediction(
            exact=snf.AbelianGroup(full_degree - 1) if report.applicable else None,
            lower=full_degree - 1,
            upper=report.upper_bound,
        )
        notes.extend({"id": "single-heavy-point-guard", "text": t} for t in report.notes)
    else:
        report = None
        prediction = None
        notes.append(
            {
                "id": "modulus-override",
                "text": f"analyzing the degree-{n} quotient cover instead of the full "
                f"degree-{full_degree} cover; combinatorial bounds apply to the full "
                "cover only and are skipped",
            }
        )
    if milnor and _is_generic_triangle(incidence):
        notes.append(
            {
                "id": "triangle-published-value",
                "text": "an earlier published computation reports rank 3 for the first "
                "homology of this cover; the exact reduction here gives rank 2, which "
                "matches the Euler characteristic and the double-point exactness "
                "criterion",
            }
        )
    if milnor:
        notes.append(
            {
                "id": "rank-lower-bound-convention",
                "text": "the enforced lower bound for the first Betti number is one "
                "less than the number of lines; the stronger published value (equal "
                "to the number of lines) does not follow from the covering argument "
                "and is not used",
            }
        )
    verdicts = _verdicts(n, full_degree, hom, report, prediction, complex_, primes)
    return Analysis(
        mode=mode,
        proj=proj,
        aff=aff,
        infinity_index=infinity_index,
        n=n,
        milnor=milnor,
        incidence=incidence,
        presentation=pres,
        complex=complex_,
        homology=hom,
        primes=primes,
        bound_report=report,
        prediction=prediction,
        verdicts=verdicts,
        notes=tuple(notes),
    )


def analyze_text(text, infinity_index=None, primes=None, modulus=None):
    return analyze(
        geometry.parse_arrangement(text),
        infinity_index=infinity_index,
        primes=primes,
        modulus=modulus,
    )


def projective_h1(arr):
    """H1 of the Milnor fiber via the projective presentation (the
    cross-validation route; must agree with analyze().h1)."""
    pres = presentation_mod.free_reduce_and_strip(
        presentation_mod.projective_presentation(arr)
    )
    complex_ = cover_mod.build_cover_complex(pres)
    return cover_mod.h1_of_cover(complex_).group


def report_dict(a):
    """JSON-ready report with the fixed key layout."""
    lines = [list(l.coeffs) for l in a.proj.lines]
    input_block = {
        "mode": a.mode,
        "lines": lines,
        "n_lines": a.proj.n_lines,
        "cover_degree": a.n,
        "infinity_index": a.infinity_index,
        "shear_t": int(a.aff.shear) if a.aff.shear is not None else 0,
    }
    incidence_block = {
        "points": [
            {"point": pt.label(), "lines": list(pt.incident), "multiplicity": pt.multiplicity}
            for pt in a.incidence.points
        ],
        "census": {str(m): c for m, c in sorted(a.incidence.multiplicity_census().items())},
    }
    presentation_block = {
        "kind": a.presentation.kind,
        "generators": a.presentation.generator_count,
        "relators": len(a.presentation.relators),
        "total_length": a.presentation.total_relator_length(),
    }
    h1_block = {"rank": a.h1.free_rank, "torsion": list(a.h1.torsion)}
    betti_block = {
        "q": a.homology.b1,
        "mod": {str(p): a.homology.betti_mod[p] for p in a.primes},
        "b0": a.homology.b0,
        "b2": a.homology.b2,
        "euler": a.homology.euler,
    }
    if a.bound_report is None:
        bounds_block = None
    else:
        r = a.bound_report
        opc = r.one_point
        bounds_block = {
            "lower": r.lower_bound,
            "onehyp": {
                "per_line": {str(i): v for i, v in sorted(r.onehyp_per_line.items())},
                "best": r.onehyp_best,
            },
            "cdo": {
                "per_k": {str(k): v for k, v in sorted(r.cdo_per_k.items())},
                "total": r.cdo_total,
            },
            "corollary_witness": r.corollary_witness,
            "one_point": {
                "fires": opc.fires,
                "witness": list(opc.witness) if opc.witness else None,
                "literal_fires": opc.literal_fires,
                "guard_blocked": list(opc.guard_blocked) if opc.guard_blocked else None,
            },
            "oka_sakamoto": [list(side) for side in r.oka_sakamoto] if r.oka_sakamoto else None,
            "applicable": [[name, _jsonable(w)] for name, w in r.applicable],
        }
    if a.prediction is None:
        prediction_block = None
    else:
        p = a.prediction
        prediction_block = {
            "exact": None
            if p.exact is None
            else {"rank": p.exact.free_rank, "torsion": list(p.exact.torsion)},
            "lower": p.lower,
            "upper": p.upper,
        }
    return {
        "input": input_block,
        "incidence": incidence_block,
        "presentation": presentation_block,
        "h1": h1_block,
        "betti": betti_block,
        "bounds": bounds_block,
        "prediction": prediction_block,
        "verdicts": dict(a.verdicts),
        "notes": [dict(n) for n in a.notes],
    }


def _jsonable(w):
    if isinstance(w, tuple):
        return [_jsonable(x) for x in w]
    return w
