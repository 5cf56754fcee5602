"""Staged analysis pipeline: classify a function, pick its defining set,
build the code, and compare against the closed forms.

Each stage records pass/fail with a human-readable detail string; a
report is the unit every front end (bundled examples, ad-hoc inputs,
randomized sweeps) serializes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import (
    BentProfile,
    BentType,
    NotBentError,
    Regularity,
    TernaryFunction,
    bent_profile,
    coset_structure,
    expected_preimage_sizes,
    is_dual_bent,
    preimage_sets,
)
from .codes import (
    CodeCase,
    CodeReport,
    DefiningSet,
    HypothesisError,
    WeightClassifier,
    build_code,
    code_report,
    predict_distribution,
    select_defining_set,
)
from .core import is_nondegenerate, is_subspace, span


@dataclass(frozen=True)
class Stage:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class PipelineReport:
    """Everything one pipeline run established, stage by stage."""

    stages: list[Stage] = field(default_factory=list)
    type: str | None = None
    regularity: str | None = None
    j0: int | None = None
    r: int | None = None
    case: str | None = None
    defining_label: str | None = None
    code: CodeReport | None = None
    notes: list[str] = field(default_factory=list)

    def stage(self, name: str) -> Stage | None:
        for s in self.stages:
            if s.name == name:
                return s
        return None

    @property
    def hypotheses_ok(self) -> bool:
        return all(s.ok for s in self.stages)

    @property
    def passed(self) -> bool:
        if not self.hypotheses_ok:
            return False
        if self.code is not None and self.code.prediction is not None:
            return self.code.match
        return self.code is not None

    def to_dict(self) -> dict:
        return {
            "stages": [{"name": s.name, "ok": s.ok, "detail": s.detail} for s in self.stages],
            "type": self.type,
            "regularity": self.regularity,
            "j0": self.j0,
            "r": self.r,
            "case": self.case,
            "defining_set": self.defining_label,
            "code": self.code.to_dict() if self.code else None,
            "notes": self.notes,
            "passed": self.passed,
        }


def _forced_points(label: str, profile: BentProfile, f: TernaryFunction):
    pre = preimage_sets(profile)
    side, value = label[0].upper(), int(label[1])
    if side == "C":
        return pre.plus[value]
    if side == "D":
        return pre.minus[value]
    raise ValueError(f"defining-set label must be C0..C2 or D0..D2, got {label!r}")


def run_pipeline(f: TernaryFunction,
                 force_set: str | None = None,
                 check_cosets: bool = True) -> PipelineReport:
    """Full run: spectrum, hypotheses, selection, code, prediction.

    Every hypothesis stage is evaluated and recorded even after one
    fails; selection and prediction run only when all hold.  A force_set
    label ("C0".."D2") builds and measures that pre-image code without a
    closed-form prediction whenever the function is at least bent.
    """
    rep = PipelineReport()

    try:
        profile = bent_profile(f)
    except NotBentError as exc:
        rep.stages.append(Stage("bent", False, str(exc)))
        return rep
    rep.stages.append(Stage("bent", True, f"all squared norms 3^{f.n}"))
    rep.type = profile.type.value
    rep.regularity = profile.regularity.value
    rep.j0 = int(f(0))

    if profile.regularity is Regularity.NON_WEAKLY_REGULAR:
        rep.stages.append(Stage("non-weakly-regular", True, ""))
    else:
        side = "minus" if profile.type is BentType.PLUS else "plus"
        rep.stages.append(Stage(
            "non-weakly-regular", False,
            f"B_{side}(f) is empty: function is {profile.regularity.value}"))

    rep.stages.append(Stage("even", f.is_even(),
                            "" if f.is_even() else "f(x) != f(-x) somewhere"))

    dual_ok, _ = is_dual_bent(f, profile)
    rep.stages.append(Stage("dual-bent", dual_ok,
                            "" if dual_ok else "dual function is not bent"))

    side_set = profile.type_side()
    subspace_ok = is_subspace(side_set, f.n)
    rep.stages.append(Stage("type-side-subspace", subspace_ok,
                            "" if subspace_ok
                            else f"|side| = {len(side_set)} is not a subspace"))
    v = span(side_set, f.n)
    rep.r = v.dim
    if subspace_ok:
        nondeg = is_nondegenerate(v)
        rep.stages.append(Stage("non-degenerate", nondeg,
                                "" if nondeg
                                else "type side meets its complement beyond 0"))
        bound_ok = v.dim >= f.n // 2 + 1
        rep.stages.append(Stage(
            "dimension-bound", bound_ok,
            f"r = {v.dim}" if bound_ok
            else f"r = {v.dim} < floor(n/2)+1 = {f.n // 2 + 1}"))

    if not rep.hypotheses_ok:
        if force_set is not None:
            points = set(_forced_points(force_set, profile, f)) - {0}
            if points:
                code = build_code(DefiningSet.from_points(points, f.n))
                rep.code = code_report(code, None, None, code.dimension)
                rep.defining_label = force_set.upper()
                first_bad = next(s.name for s in rep.stages if not s.ok)
                rep.notes.append(
                    f"hypothesis '{first_bad}' failed; measured the requested "
                    f"set {force_set.upper()} without a prediction"
                )
        return rep

    ctx = select_defining_set(f, profile)
    rep.case = ctx.case.value
    rep.r = ctx.r
    side_letter = "C" if ctx.case.side is BentType.PLUS else "D"
    pre = ctx.preimages
    sel_value = None
    for i in range(3):
        pts = pre.plus[i] if ctx.case.side is BentType.PLUS else pre.minus[i]
        if frozenset(ctx.defining.points) == pts - {0}:
            sel_value = i
            break
    rep.defining_label = f"{side_letter}{sel_value}"

    sizes = expected_preimage_sizes(f.n, ctx.r, ctx.j0, ctx.case.side)
    measured = {
        i: len(pre.plus[i] if ctx.case.side is BentType.PLUS else pre.minus[i])
        for i in range(3)
    }
    rep.stages.append(Stage("preimage-sizes", measured == sizes,
                            f"measured {measured}, closed form {sizes}"))

    if check_cosets:
        cs = coset_structure(f, profile)
        rep.stages.append(Stage("coset-structure",
                                cs.coset_union_ok and cs.constant_ok,
                                f"constant branch {cs.constant_branch}"))

    code = build_code(ctx.defining)
    prediction = predict_distribution(ctx.case, f.n, ctx.r)
    rep.code = code_report(code, prediction, ctx.case, ctx.r)
    rep.notes.extend(rep.code.notes)

    classifier = WeightClassifier(ctx, f)
    bad = classifier.check_all()
    rep.stages.append(Stage("per-codeword-weights", bad is None,
                            "" if bad is None else f"message {bad} off prediction"))
    return rep
