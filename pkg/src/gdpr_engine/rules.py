"""Compliance rule catalog and evaluation engine.

Each rule is a pure predicate over (graph, profile, check date) producing a
four-valued verdict: Pass, Fail, NotApplicable, or Unknown. NotApplicable
encodes both conditional rules whose trigger is absent and the global
applicability gate: when the scope rule C1 does not hold, every other rule
reports NotApplicable. Unknown is produced only in strict-variability mode,
when a verdict depended on a variation hook that no resolution implemented.

Rules never mutate the graph, never raise on odd data, and iterate objects
in id order, so reports are deterministic and independent of declaration
order. They may run concurrently; report assembly preserves catalog order.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from . import enums, timebase
from .model import (
    Actor,
    Breach,
    Certification,
    Consent,
    Country,
    DataProcessing,
    DataSubject,
    DataTransfer,
    Document,
    DPIA,
    GenericNode,
    Infringement,
    InstanceGraph,
    PersonalData,
    Purpose,
    RecordActivity,
    ResponsibleParent,
    RightRequest,
    RightSupport,
    SecurityMeasure,
    TurnoverContext,
)

PASS = "Pass"
FAIL = "Fail"
NOT_APPLICABLE = "NotApplicable"
UNKNOWN = "Unknown"

STATUSES = (PASS, FAIL, NOT_APPLICABLE, UNKNOWN)

PUBLIC_AUTHORITY_KINDS = frozenset({"OFFICIAL", "PUBLIC_ORGANIZATION"})

# Art. 30 record content per role. The trailing sets are "where possible"
# items: their absence is reported but does not fail the record.
CONTROLLER_RECORD_ITEMS = frozenset({
    "NAME_AND_CONTACT_DETAILS",
    "PROCESSING_PURPOSES",
    "DATA_SUBJECT_AND_DATA_CATEGORIES",
    "RECIPIENTS",
})
PROCESSOR_RECORD_ITEMS = frozenset({
    "NAME_AND_CONTACT_DETAILS",
    "PROCESSING_CATEGORIES",
})
RECORD_ITEMS_WHERE_POSSIBLE = {
    "controller": frozenset({"ERASURE_TIME_LIMITS", "SECURITY_MEASURES_DESCRIPTION"}),
    "processor": frozenset({"SECURITY_MEASURES_DESCRIPTION"}),
}

# Art. 35(7) minimal content of an impact assessment.
DPIA_MINIMAL_CONTENT = frozenset({
    "NECESSITY_ASSESSMENT",
    "PROPORTIONALITY_ASSESSMENT",
    "FREEDOMS_ASSESSMENT",
    "MEASURES_DESCRIPTION",
})

# Art. 32 capabilities expected among the declared measures.
SECURITY_TECHNICAL_KINDS = frozenset({
    "PSEUDONYMIZATION",
    "ENCRYPTION",
    "BACKUPS_RECOVERY",
})

# Art. 47(2) information a binding-corporate-rules basis must carry.
BCR_MANDATORY_INFORMATION = frozenset({
    "UNDERTAKING_STRUCTURE",
    "CONTACT_DETAILS",
    "DATA_CATEGORIES",
    "TYPE_PROCESSING_AFTER_TRANSFER",
    "PURPOSES_PROCESSING_AFTER_TRANSFER",
    "TYPE_DS_AFFECTED",
    "TARGET_COUNTRIES",
    "INTERNAL_COUNTRIES_BINDING_LAWS",
    "EXTERNAL_COUNTRIES_BINDING_LAWS",
    "APPLIED_GDPR_PRINCIPLES",
    "LIABILITY_SHARING",
    "HOW_DS_INFORMED",
    "DPO_TASKS",
    "COMPLIANCE_PROCEDURES",
    "REPORTING_MECHANISMS",
    "PERSONAL_TRAINING",
})

# Art. 83 fine tiers by infringement kind. Kinds absent from both sets
# cannot be classified and raise FineClassificationError.
FINE_TIER1_KINDS = frozenset({
    "OBLIGATION_VIOLATION",
    "CHILD_CONSENT_VIOLATION",
    "CERTIFICATION_OBLIGATION_VIOLATION",
    "INSUFFICIENT_SECURITY_MEASURES",
    "FALSE_DECLARATION",
})
FINE_TIER2_KINDS = frozenset({
    "PRINCIPLE_VIOLATION",
    "DS_RIGHT_VIOLATION",
    "UNAUTHORIZED_TRANSFER",
    "CROSS_BORDER_TRANSFER_VIOLATION",
    "FORBIDDEN_PROCESSING",
    "CORRECTIVE_ACTION_VIOLATION",
    "OTHER_LOCAL_LAW_VIOLATION",
})

ALWAYS_APPLICABLE_RIGHTS = frozenset({
    "RIGHT_TO_BE_INFORMED",
    "RIGHT_TO_ACCESS",
    "RIGHT_TO_RECTIFICATION",
    "RIGHT_TO_ERASURE",
    "RIGHT_TO_RESTRICTION",
    "NOTIFICATION",
    "INFORMATION",
})


class UnknownRuleError(KeyError):
    """Evaluation of a rule id that is not active in the profile."""


class ProfileNotFinalizedError(RuntimeError):
    """evaluate_all needs a finalized profile."""


class FineClassificationError(ValueError):
    """Infringement kind has no Art. 83 fine tier."""


@dataclass(frozen=True)
class Finding:
    objectId: str
    message: str

    def to_payload(self) -> dict:
        return {"object": self.objectId, "message": self.message}


@dataclass(frozen=True)
class RuleVerdict:
    ruleId: str
    status: str
    articles: tuple[int, ...]
    findings: tuple[Finding, ...] = ()
    hookDependencies: tuple[str, ...] = ()

    def to_payload(self) -> dict:
        return {
            "rule": self.ruleId,
            "status": self.status,
            "articles": list(self.articles),
            "findings": [f.to_payload() for f in self.findings],
            "hookDependencies": list(self.hookDependencies),
        }


@dataclass(frozen=True)
class RuleSpec:
    id: str
    articles: tuple[int, ...]
    summary: str
    predicate: Callable[["EvalContext"], tuple[str, list[Finding]]]
    hooksUsed: frozenset[str] = frozenset()
    origin: str = "generic"  # "generic" | "variation"


def rule_sort_key(rule_id: str) -> tuple:
    """Catalog order: C1..C35 numerically, then variation rules."""
    if rule_id.startswith("C") and rule_id[1:].isdigit():
        return (0, int(rule_id[1:]), 0)
    if rule_id.startswith("V"):
        body = rule_id[1:].split("_")
        major = int(body[0]) if body[0].isdigit() else 99
        minor = int(body[1]) if len(body) > 1 and body[1].isdigit() else 0
        return (1, major, minor)
    return (2, 0, 0)


# ---------------------------------------------------------------------------
# Evaluation context
# ---------------------------------------------------------------------------

class EvalContext:
    """Per-evaluation view over (graph, profile, check date).

    Tracks which variation hooks were answered by their built-in default so
    strict mode can demote the affected verdicts to Unknown.
    """

    def __init__(self, graph: InstanceGraph, profile=None,
                 check_minutes: int | None = None, strict: bool = False):
        self.graph = graph
        self.profile = profile
        self.check_minutes = (graph.latest_minutes()
                              if check_minutes is None else check_minutes)
        self.strict = strict
        self.defaulted_hooks: set[str] = set()
        self._scope: list[DataProcessing] | None = None

    # -- hooks --------------------------------------------------------------

    def hook(self, name: str, *args):
        params = None
        if self.profile is not None:
            params = self.profile.hook_params(name)
        if params is None:
            self.defaulted_hooks.add(name)
        return HOOK_IMPLS[name](self, params, *args)

    def resolution_params(self, variation_id: str) -> Mapping | None:
        if self.profile is None:
            return None
        return self.profile.resolution_params(variation_id)

    def begin_rule(self) -> None:
        self.defaulted_hooks = set()

    # -- graph shorthands -----------------------------------------------------

    def minutes(self, raw: str | None) -> int | None:
        if not raw:
            return None
        try:
            return timebase.parse_minutes(raw)
        except timebase.TimestampError:
            return None

    def scope(self) -> list[DataProcessing]:
        """Processings the substantive rules quantify over: personal data is
        involved and the processing context is not out of material scope."""
        if self._scope is None:
            self._scope = [
                p for p in self.graph.processings()
                if p.personalData and p.type not in enums.EXEMPT_PROCESSING_CONTEXTS
            ]
        return self._scope

    def personal_data(self, p: DataProcessing) -> list[PersonalData]:
        return [n for n in self.graph.resolve(p.personalData)
                if isinstance(n, PersonalData)]

    def purposes(self, p: DataProcessing) -> list[Purpose]:
        return [n for n in self.graph.resolve(p.purposes) if isinstance(n, Purpose)]

    def bases(self, p: DataProcessing) -> set[str]:
        return {pu.legalBasis for pu in self.purposes(p)}

    def categories(self, p: DataProcessing) -> set[str]:
        out: set[str] = set()
        for pd in self.personal_data(p):
            out.update(pd.categories)
        return out

    def subjects(self, p: DataProcessing) -> list[DataSubject]:
        seen: dict[str, DataSubject] = {}
        for pd in self.personal_data(p):
            for node in self.graph.resolve(pd.subjects):
                if isinstance(node, DataSubject):
                    seen[node.id] = node
        return [seen[i] for i in sorted(seen)]

    def consent_of(self, p: DataProcessing) -> Consent | None:
        node = self.graph.get(p.consent) if p.consent else None
        return node if isinstance(node, Consent) else None

    def consent_based(self, p: DataProcessing) -> bool:
        return p.consent is not None or "BY_CONSENT" in self.bases(p)

    def controllers(self, p: DataProcessing) -> list[Actor]:
        return [a for a in self.graph.resolve(p.controllers) if isinstance(a, Actor)]

    def processors(self, p: DataProcessing) -> list[Actor]:
        return [a for a in self.graph.resolve(p.processors) if isinstance(a, Actor)]

    def actors(self, p: DataProcessing) -> list[Actor]:
        seen: dict[str, Actor] = {}
        for actor in self.controllers(p) + self.processors(p):
            seen[actor.id] = actor
        return [seen[i] for i in sorted(seen)]

    def euro_link(self, actor: Actor) -> bool:
        for node in self.graph.resolve(actor.countries):
            if isinstance(node, Country) and (node.isEUMemberState or node.EULawApplies):
                return True
        return False

    def measures(self, p: DataProcessing, cls: str) -> list[SecurityMeasure]:
        return [m for m in self.graph.resolve(p.securityMeasures)
                if isinstance(m, SecurityMeasure) and m.cls == cls]

    def supports(self, p: DataProcessing) -> list[RightSupport]:
        return [s for s in self.graph.resolve(p.supportedRights)
                if isinstance(s, RightSupport)]

    def requests(self, support: RightSupport) -> list[RightRequest]:
        return [r for r in self.graph.resolve(support.requests)
                if isinstance(r, RightRequest)]

    def identifiable(self, p: DataProcessing) -> bool:
        return any(pd.identifiesSubject for pd in self.personal_data(p))

    def generic_nodes(self, class_name: str) -> list[GenericNode]:
        return [n for n in self.graph.of_class(class_name)
                if isinstance(n, GenericNode)]

    def evidence_nodes(self, class_name: str, role: str, target_id: str) -> list[GenericNode]:
        return [n for n in self.generic_nodes(class_name)
                if target_id in n.refs.get(role, ())]

    def notification_for(self, p: DataProcessing, about: str) -> GenericNode | None:
        for node in self.evidence_nodes("Notification", "processing", p.id):
            if node.attrs.get("about") == about:
                return node
        return None

    def dpo_designated_for(self, actor_id: str) -> bool:
        for dpo in self.graph.of_class("Data_Protection_Officer"):
            if isinstance(dpo, Actor) and actor_id in dpo.designatedBy:
                return True
        return False

    # -- profile-driven scoping ------------------------------------------------

    def adaptation(self, rule_id: str):
        if self.profile is None:
            return None
        return self.profile.adaptations.get(rule_id)

    def adapted_out(self, rule_id: str, p: DataProcessing) -> bool:
        desc = self.adaptation(rule_id)
        return bool(desc and p.type in desc.exemptProcessingTypes)

    def right_removed(self, rule_id: str, right: str) -> bool:
        desc = self.adaptation(rule_id)
        return bool(desc and right in desc.removedRights)

    def right_derogated(self, p: DataProcessing, right: str) -> bool:
        """Art. 89/90 national derogations lifted via V17/V18 resolutions."""
        params = self.resolution_params("V17")
        if params and right in params.get("derogatedRights", ()):
            if p.type in params.get("processingTypes",
                                    ("RESEARCH", "STATISTICAL_PURPOSES")):
                return True
        params = self.resolution_params("V18")
        if params and right in params.get("derogatedRights", ()):
            if "ARCHIVING" in p.operations:
                return True
        return False

    def rights_applicable(self, p: DataProcessing) -> set[str]:
        rights = set(ALWAYS_APPLICABLE_RIGHTS)
        bases = self.bases(p)
        if bases & {"BY_CONSENT", "PERFORMANCE_OF_CONTRACT"} and any(
                pd.collectedDirectlyFromSubject for pd in self.personal_data(p)):
            rights.add("RIGHT_TO_PORTABILITY")
        if bases & {"BY_CONSENT", "LEGITIMATE_INTEREST", "PUBLIC_INTEREST"} \
                or "PROFILING" in p.operations:
            rights.add("RIGHT_TO_OBJECT")
        if p.automatedDecisionMaking:
            rights.add("RIGHT_TO_NOT_BE_PART_OF_A_DECISION")
        rights = {r for r in rights
                  if not self.right_removed("C9", r)
                  and not self.right_derogated(p, r)}
        return rights

    def rights_exempt(self, p: DataProcessing) -> bool:
        """Art. 11: all data non-identifying lifts the subject-right duties."""
        data = self.personal_data(p)
        return bool(data) and not any(pd.identifiesSubject for pd in data)


# ---------------------------------------------------------------------------
# Variation hooks (defaults encode the generic rule set)
# ---------------------------------------------------------------------------

def _hook_minimum_age(ctx: EvalContext, params, subject: DataSubject,
                      processing: DataProcessing | None) -> int:
    if not params:
        return 16
    thresholds = params.get("thresholds", {})
    country = ctx.graph.get(subject.residence) if subject.residence else None
    code = country.code if isinstance(country, Country) else None
    return int(thresholds.get(code, params.get("default", 16)))


def _hook_parent_documents(ctx: EvalContext, params,
                           parent: ResponsibleParent) -> bool:
    docs = [d for d in ctx.graph.resolve(parent.documents)
            if isinstance(d, Document)]
    accepted = set(params.get("acceptedDocumentKinds", ())) if params else set()
    for doc in docs:
        if doc.valid and (not accepted or doc.kind in accepted):
            return True
    return False


def _hook_prohibition_liftable(ctx: EvalContext, params,
                               processing: DataProcessing) -> bool:
    if not params:
        return True
    return bool(params.get("canBeLifted", True))


def _hook_without_instructions(ctx: EvalContext, params, processor: Actor,
                               processing: DataProcessing) -> bool:
    if not params:
        return False
    return bool(params.get("allowedWithoutInstructions", False))


def _hook_bodies_must_designate_dpo(ctx: EvalContext, params, actor: Actor) -> bool:
    if not params:
        return False
    return actor.kind in set(params.get("actorKinds", ()))


HOOK_IMPLS: dict[str, Callable] = {
    "V_getMinimumAgeForDS": _hook_minimum_age,
    "V_checkParentDocuments": _hook_parent_documents,
    "V_prohibitionCanBeLiftedByConsent": _hook_prohibition_liftable,
    "V_processWithoutControllerInstructions": _hook_without_instructions,
    "V_bodiesMustDesignateDPO": _hook_bodies_must_designate_dpo,
}

DEFAULT_HOOKS = tuple(sorted(HOOK_IMPLS))


# ---------------------------------------------------------------------------
# Rule registration
# ---------------------------------------------------------------------------

RULE_CATALOG: dict[str, RuleSpec] = {}
VARIATION_RULE_SPECS: dict[str, RuleSpec] = {}


def _register(table: dict[str, RuleSpec], rule_id: str, articles: tuple[int, ...],
              summary: str, hooks: tuple[str, ...] = (), origin: str = "generic"):
    def wrap(fn):
        table[rule_id] = RuleSpec(
            id=rule_id,
            articles=articles,
            summary=summary,
            predicate=fn,
            hooksUsed=frozenset(hooks),
            origin=origin,
        )
        return fn
    return wrap


def rule(rule_id, articles, summary, hooks=()):
    return _register(RULE_CATALOG, rule_id, articles, summary, hooks)


def variation_rule(rule_id, articles, summary, hooks=()):
    return _register(VARIATION_RULE_SPECS, rule_id, articles, summary, hooks,
                     origin="variation")


def _status(instances: Sequence, failures: list[Finding],
            notes: list[Finding] | None = None) -> tuple[str, list[Finding]]:
    if not instances:
        return NOT_APPLICABLE, []
    findings = sorted(failures + (notes or []),
                      key=operator.attrgetter("objectId", "message"))
    return (FAIL if failures else PASS), findings


# ---------------------------------------------------------------------------
# Chapter I: applicability gate
# ---------------------------------------------------------------------------

@rule("C1", (2, 3), "material and territorial applicability of the regulation")
def _c1(ctx: EvalContext) -> tuple[str, list[Finding]]:
    selected = [p for p in ctx.graph.processings() if p.personalData]
    if not selected:
        return NOT_APPLICABLE, [Finding("", "no processing involves personal data")]

    def eu_country(country_id: str) -> bool:
        node = ctx.graph.get(country_id)
        return isinstance(node, Country) and (node.isEUMemberState or node.EULawApplies)

    territorial = False
    for p in selected:
        if any(ctx.euro_link(a) for a in ctx.actors(p)):
            territorial = True
            break
        if p.type in ("OFFERING_GOODS_OR_SERVICES", "EU_BEHAVIOUR_MONITORING_OR_PROFILING"):
            if any(eu_country(s.residence) for s in ctx.subjects(p)):
                territorial = True
                break
    if not territorial:
        return NOT_APPLICABLE, [Finding(
            "", "no involved organization operates in the EU and no processing "
                "targets EU-resident subjects")]

    if all(p.type in enums.EXEMPT_PROCESSING_CONTEXTS for p in selected):
        return NOT_APPLICABLE, [Finding(
            "", "every processing of personal data falls in an out-of-scope "
                "context (security, household, or criminal investigation)")]
    return PASS, []


def check_applicability(graph: InstanceGraph, profile=None,
                        check_date: str | None = None) -> RuleVerdict:
    """Standalone evaluation of the applicability gate."""
    ctx = EvalContext(graph, profile,
                      None if check_date is None else timebase.parse_minutes(check_date))
    status, findings = _c1(ctx)
    return RuleVerdict("C1", status, RULE_CATALOG["C1"].articles, tuple(findings))


# ---------------------------------------------------------------------------
# Chapter II: principles
# ---------------------------------------------------------------------------

@rule("C2", (5,), "each processing demonstrates adherence to the principles")
def _c2(ctx: EvalContext) -> tuple[str, list[Finding]]:
    scope = [p for p in ctx.scope() if not ctx.adapted_out("C2", p)]
    failures = [
        Finding(p.id, "no demonstration of principle compliance is recorded")
        for p in scope
        if not ctx.evidence_nodes("Demonstration", "processing", p.id)
    ]
    return _status(scope, failures)


@rule("C3", (6,), "lawfulness evidence for obligation-based and re-purposed processing")
def _c3(ctx: EvalContext) -> tuple[str, list[Finding]]:
    triggered = []
    failures: list[Finding] = []
    for p in ctx.scope():
        for purpose in ctx.purposes(p):
            if purpose.legalBasis == "LEGAL_OBLIGATION":
                triggered.append(purpose)
                if not purpose.obligationSource:
                    failures.append(Finding(
                        purpose.id, "legal-obligation basis without its obligation source"))
            elif purpose.legalBasis == "NONE":
                triggered.append(purpose)
                if not (ctx.evidence_nodes("Lawfulness_Evidence", "purpose", purpose.id)
                        or ctx.evidence_nodes("Lawfulness_Evidence", "processing", p.id)):
                    failures.append(Finding(
                        purpose.id,
                        "processing outside the original collection purpose "
                        "lacks recorded lawfulness evidence"))
    return _status(triggered, failures)


_CONSENT_QUALITY_FLAGS = (
    "freelyGiven", "specific", "informed", "unambiguous",
    "affirmativeAction", "withdrawable", "distinguishable",
)


@rule("C4", (7,), "every recorded consent satisfies all consent conditions")
def _c4(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        consent = ctx.consent_of(p)
        if consent is None and "BY_CONSENT" in ctx.bases(p):
            instances.append(p)
            failures.append(Finding(
                p.id, "consent-based processing records no consent agreement"))
        elif consent is not None:
            instances.append(consent)
            missing = [f for f in _CONSENT_QUALITY_FLAGS if not getattr(consent, f)]
            if missing:
                failures.append(Finding(
                    consent.id,
                    "consent conditions not met: " + ", ".join(sorted(missing))))
    return _status(instances, failures)


@rule("C5", (8,), "age conditions for consent, with the parental fallback",
      hooks=("V_getMinimumAgeForDS", "V_checkParentDocuments"))
def _c5(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances = [p for p in ctx.scope() if ctx.consent_based(p)]
    failures: list[Finding] = []
    for p in instances:
        consent = ctx.consent_of(p)
        if consent is None:
            continue  # absence of the agreement itself is C4's finding
        giver = ctx.graph.get(consent.givenBy)
        for subject in ctx.subjects(p):
            minimum = ctx.hook("V_getMinimumAgeForDS", subject, p)
            if subject.ageYears >= minimum:
                continue
            if subject.cls != "Child_Data_Subject":
                failures.append(Finding(
                    subject.id,
                    f"subject aged {subject.ageYears} is below the consent age "
                    f"of {minimum} and is not modeled as a child subject"))
                continue
            if not isinstance(giver, ResponsibleParent):
                failures.append(Finding(
                    subject.id,
                    f"consent for a child aged {subject.ageYears} was not "
                    "given by a responsible parent"))
                continue
            if giver.responsibleFor and subject.id not in giver.responsibleFor:
                failures.append(Finding(
                    subject.id,
                    "consenting parent does not hold responsibility for this subject"))
                continue
            if not ctx.hook("V_checkParentDocuments", giver):
                failures.append(Finding(
                    giver.id,
                    "responsible parent holds no accepted valid document"))
    return _status(instances, failures)


def check_child_consent(graph: InstanceGraph, profile,
                        check_date: str | None = None,
                        strict: bool = False) -> RuleVerdict:
    """Standalone evaluation of the child-consent rule."""
    return evaluate_rule("C5", graph, profile, check_date=check_date, strict=strict)


@rule("C6", (9,), "special data categories processed only under a lifting condition",
      hooks=("V_prohibitionCanBeLiftedByConsent",))
def _c6(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances = [p for p in ctx.scope()
                 if ctx.categories(p) & enums.SPECIAL_DATA_CATEGORIES]
    failures: list[Finding] = []
    for p in instances:
        exception = p.specialCategoriesException or "NONE"
        if exception == "NONE":
            failures.append(Finding(
                p.id, "special-category processing declares no lifting condition"))
        elif exception == "CONSENT_PERMITTED_BY_EU":
            if not ctx.hook("V_prohibitionCanBeLiftedByConsent", p):
                failures.append(Finding(
                    p.id, "the prohibition cannot be lifted by consent here"))
                continue
            consent = ctx.consent_of(p)
            if consent is None or not consent.explicit:
                failures.append(Finding(
                    p.id, "special-category processing lacks explicit consent"))
    return _status(instances, failures)


@rule("C7", (10,), "criminal-conviction data only under official authority or law")
def _c7(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        if "JUDICIAL" not in ctx.categories(p):
            continue
        instances.append(p)
        official = any(a.kind == "OFFICIAL" for a in ctx.controllers(p))
        authorized = "LEGAL_OBLIGATION" in ctx.bases(p)
        if not (official or authorized):
            failures.append(Finding(
                p.id, "criminal-conviction data processed without official "
                      "authority or a legal authorization"))
    for node in ctx.generic_nodes("Filing_System"):
        if not node.attrs.get("criminalRegister"):
            continue
        instances.append(node)
        holders = [ctx.graph.get(i) for i in node.refs.get("holder", ())]
        if not any(isinstance(h, Actor) and h.kind == "OFFICIAL" for h in holders):
            failures.append(Finding(
                node.id, "a register of criminal convictions is not kept "
                         "under official authority"))
    return _status(instances, failures)


@rule("C8", (11,), "the non-identifiability exemption is claimed truthfully")
def _c8(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances = [p for p in ctx.scope() if p.rightsExempt]
    failures: list[Finding] = []
    for p in instances:
        if any(pd.identifiesSubject for pd in ctx.personal_data(p)):
            failures.append(Finding(
                p.id, "claims the non-identifiability exemption from subject "
                      "rights while its data identifies subjects"))
    return _status(instances, failures)


# ---------------------------------------------------------------------------
# Chapter III: data subject rights
# ---------------------------------------------------------------------------

def _rights_scope(ctx: EvalContext, rule_id: str) -> list[DataProcessing]:
    return [
        p for p in ctx.scope()
        if ctx.identifiable(p)
        and not ctx.rights_exempt(p)
        and not ctx.adapted_out(rule_id, p)
    ]


@rule("C9", (12,), "rights are supported and requests handled on time, "
                   "verified, reasoned, and free of charge")
def _c9(ctx: EvalContext) -> tuple[str, list[Finding]]:
    scope = _rights_scope(ctx, "C9")
    failures: list[Finding] = []
    for p in scope:
        enabled = {s.right for s in ctx.supports(p) if s.enabled}
        for right in sorted(ctx.rights_applicable(p)):
            if right not in enabled:
                failures.append(Finding(
                    p.id, f"applicable right {right} is not supported"))
        for support in ctx.supports(p):
            for request in ctx.requests(support):
                failures.extend(_request_findings(ctx, support, request))
    return _status(scope, failures)


def _request_findings(ctx: EvalContext, support: RightSupport,
                      request: RightRequest) -> list[Finding]:
    out: list[Finding] = []
    received = ctx.minutes(request.receivedAt)
    responded = ctx.minutes(request.respondedAt)
    if received is not None:
        deadline = received + timebase.REQUEST_RESPONSE_MINUTES
        if request.extensionNotified:
            deadline += timebase.REQUEST_EXTENSION_MINUTES
        if responded is not None:
            if responded > deadline:
                out.append(Finding(
                    request.id,
                    f"request under {support.right} answered after the "
                    "one-month window (and any notified extension)"))
        elif ctx.check_minutes > deadline:
            out.append(Finding(
                request.id,
                f"request under {support.right} is still unanswered after "
                "the response window"))
    if responded is not None and not request.identityVerified:
        out.append(Finding(
            request.id, "request handled without verifying the subject's identity"))
    if not request.granted and request.denialReason is None:
        out.append(Finding(
            request.id, "request denied without a stated reason"))
    if request.granted and not request.free:
        out.append(Finding(
            request.id, "granted request was charged a fee"))
    return out


_C10_BASE_ITEMS = frozenset({
    "CONTACT_DETAILS",
    "PURPOSE_AND_LAWFULNESS",
    "STORAGE_DURATION",
    "DS_RIGHT",
    "RIGHT_TO_LODGE_COMPLAINT",
})


def _notice_items(ctx: EvalContext, p: DataProcessing, direct: bool) -> set[str]:
    required = set(_C10_BASE_ITEMS)
    if not direct:
        required.add("DATA_CATEGORIES")
    if any(ctx.dpo_designated_for(a.id) for a in ctx.actors(p)):
        required.add("DPO_DETAILS")
    if p.recipients:
        required.add("RECIPIENTS")
    if p.transfers:
        required.add("TRANSFER_THIRD_COUNTRIES")
    if p.consent:
        required.add("CONSENT_WITHDRAWAL")
    if direct and "PERFORMANCE_OF_CONTRACT" in ctx.bases(p):
        required.add("STATUTORY_CONTRACTUAL_REQUIREMENT")
    if p.automatedDecisionMaking:
        required.add("AUTOMATED_DECISION")
    if "NONE" in ctx.bases(p):
        required.add("FURTHER_PROCESSING")
    return required


def _notice_rule(ctx: EvalContext, rule_id: str, direct: bool,
                 exemptions: frozenset[str]) -> tuple[str, list[Finding]]:
    scope = []
    failures: list[Finding] = []
    for p in ctx.scope():
        if ctx.adapted_out(rule_id, p):
            continue
        collected = [pd.collectedDirectlyFromSubject for pd in ctx.personal_data(p)]
        if direct and not any(collected):
            continue
        if not direct and all(collected):
            continue
        if p.informationExemption in exemptions:
            continue
        scope.append(p)
        missing = _notice_items(ctx, p, direct) - set(p.informationProvided)
        if missing:
            failures.append(Finding(
                p.id, "information not provided to subjects: "
                      + ", ".join(sorted(missing))))
    return _status(scope, failures)


@rule("C10", (13,), "notice content when data is collected from the subject")
def _c10(ctx: EvalContext) -> tuple[str, list[Finding]]:
    return _notice_rule(ctx, "C10", True, frozenset({"ALREADY_INFORMED"}))


@rule("C11", (14,), "notice content when data is not collected from the subject")
def _c11(ctx: EvalContext) -> tuple[str, list[Finding]]:
    return _notice_rule(ctx, "C11", False,
                        enums.ENUMERATIONS[enums.INFORMATION_EXEMPTION])


@rule("C12", (15,), "content that must back the right of access")
def _c12(ctx: EvalContext) -> tuple[str, list[Finding]]:
    scope = [p for p in _rights_scope(ctx, "C12")
             if not ctx.right_derogated(p, "RIGHT_TO_ACCESS")]
    failures: list[Finding] = []
    for p in scope:
        required = {
            "PURPOSE_AND_LAWFULNESS",
            "RECIPIENTS",
            "STORAGE_DURATION",
            "DS_RIGHT",
            "RIGHT_TO_LODGE_COMPLAINT",
            "RIGHT_TO_RECEIVE_COPY",
        }
        if any(not pd.collectedDirectlyFromSubject for pd in ctx.personal_data(p)):
            required.add("DATA_SOURCE")
        if p.automatedDecisionMaking:
            required.add("AUTOMATED_DECISION")
        if p.transfers:
            required.add("TRANSFER_THIRD_COUNTRIES")
        missing = required - set(p.informationProvided)
        if missing:
            failures.append(Finding(
                p.id, "access-right content unavailable: " + ", ".join(sorted(missing))))
    return _status(scope, failures)


def _granted_requests(ctx: EvalContext, p: DataProcessing,
                      right: str) -> list[RightRequest]:
    out: list[RightRequest] = []
    for support in ctx.supports(p):
        if support.right != right:
            continue
        out.extend(r for r in ctx.requests(support) if r.granted)
    return out


def _denied_requests(ctx: EvalContext, p: DataProcessing,
                     right: str) -> list[RightRequest]:
    out: list[RightRequest] = []
    for support in ctx.supports(p):
        if support.right != right:
            continue
        out.extend(r for r in ctx.requests(support) if not r.granted)
    return out


def _notify_recipients(ctx: EvalContext, p: DataProcessing, about: str,
                       failures: list[Finding]) -> None:
    if not p.recipients:
        return
    note = ctx.notification_for(p, about)
    if note is None:
        failures.append(Finding(
            p.id, f"recipients were not notified of the {about.lower()}"))
    elif not note.attrs.get("dsInformed"):
        failures.append(Finding(
            note.id, "the subject was not told about the notified recipients"))


@rule("C13", (16,), "rectifications propagate to recipients and the subject")
def _c13(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in _rights_scope(ctx, "C13"):
        if ctx.right_derogated(p, "RIGHT_TO_RECTIFICATION"):
            continue
        granted = _granted_requests(ctx, p, "RIGHT_TO_RECTIFICATION")
        if not granted:
            continue
        instances.extend(granted)
        _notify_recipients(ctx, p, "RECTIFICATION", failures)
    return _status(instances, failures)


@rule("C14", (17,), "erasure requests honored or denied on an admitted ground")
def _c14(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    allowed = enums.ENUMERATIONS[enums.DENIAL_ERASURE_REASON]
    for p in _rights_scope(ctx, "C14"):
        if ctx.right_derogated(p, "RIGHT_TO_ERASURE"):
            continue
        for request in _denied_requests(ctx, p, "RIGHT_TO_ERASURE"):
            instances.append(request)
            if request.denialReason not in allowed:
                failures.append(Finding(
                    request.id, "erasure denied without an admitted ground"))
        granted = _granted_requests(ctx, p, "RIGHT_TO_ERASURE")
        if granted:
            instances.extend(granted)
            _notify_recipients(ctx, p, "ERASURE", failures)
    return _status(instances, failures)


@rule("C15", (18,), "restriction requests reasoned and notified")
def _c15(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in _rights_scope(ctx, "C15"):
        if ctx.right_derogated(p, "RIGHT_TO_RESTRICTION"):
            continue
        for request in _denied_requests(ctx, p, "RIGHT_TO_RESTRICTION"):
            instances.append(request)
            if request.denialReason is None:
                failures.append(Finding(
                    request.id, "restriction denied without a stated reason"))
        granted = _granted_requests(ctx, p, "RIGHT_TO_RESTRICTION")
        if granted:
            instances.extend(granted)
            _notify_recipients(ctx, p, "RESTRICTION", failures)
    return _status(instances, failures)


@rule("C16", (20,), "portability honored when its preconditions hold")
def _c16(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in _rights_scope(ctx, "C16"):
        if ctx.right_derogated(p, "RIGHT_TO_PORTABILITY"):
            continue
        bases = ctx.bases(p)
        for support in ctx.supports(p):
            if support.right != "RIGHT_TO_PORTABILITY":
                continue
            for request in ctx.requests(support):
                instances.append(request)
                preconditions = (
                    "PUBLIC_INTEREST" not in bases
                    and bases & {"BY_CONSENT", "PERFORMANCE_OF_CONTRACT"}
                    and any(pd.collectedDirectlyFromSubject
                            for pd in ctx.personal_data(p))
                    and request.identityVerified
                )
                if preconditions and not request.granted:
                    failures.append(Finding(
                        request.id, "portability request denied although every "
                                    "precondition holds"))
                elif not preconditions and not request.granted \
                        and request.denialReason is None:
                    failures.append(Finding(
                        request.id, "portability denied without telling the "
                                    "subject why"))
    return _status(instances, failures)


@rule("C17", (21,), "objections honored or overridden for a stated ground")
def _c17(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in _rights_scope(ctx, "C17"):
        if ctx.right_derogated(p, "RIGHT_TO_OBJECT"):
            continue
        applicable = (
            ctx.bases(p) & {"BY_CONSENT", "LEGITIMATE_INTEREST", "PUBLIC_INTEREST"}
            or "PROFILING" in p.operations
        )
        if not applicable:
            continue
        for request in _denied_requests(ctx, p, "RIGHT_TO_OBJECT"):
            instances.append(request)
            if request.denialReason is None:
                failures.append(Finding(
                    request.id, "objection rejected without demonstrating an "
                                "overriding ground"))
        instances.extend(_granted_requests(ctx, p, "RIGHT_TO_OBJECT"))
    return _status(instances, failures)


@rule("C18", (22,), "solely automated decisions only under an allowed exception")
def _c18(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances = [p for p in _rights_scope(ctx, "C18") if p.automatedDecisionMaking]
    failures: list[Finding] = []
    for p in instances:
        consent = ctx.consent_of(p)
        explicit_consent = consent is not None and consent.explicit
        special = bool(ctx.categories(p) & enums.SPECIAL_DATA_CATEGORIES)
        if special:
            if not (explicit_consent or p.specialCategoriesException == "PUBLIC_SERVICE"):
                failures.append(Finding(
                    p.id, "automated decisions over special categories without "
                          "explicit consent or a substantial-public-interest basis"))
            continue
        bases = ctx.bases(p)
        supported = any(s.right == "RIGHT_TO_NOT_BE_PART_OF_A_DECISION" and s.enabled
                        for s in ctx.supports(p))
        allowed = (
            supported
            or "PERFORMANCE_OF_CONTRACT" in bases
            or "LEGAL_OBLIGATION" in bases
            or explicit_consent
        )
        if not allowed:
            failures.append(Finding(
                p.id, "solely automated decision-making with no exception and "
                      "no supported opt-out right"))
    return _status(instances, failures)


# ---------------------------------------------------------------------------
# Chapter IV: controller and processor obligations
# ---------------------------------------------------------------------------

@rule("C19", (24, 25), "technical and organizational measures, by design")
def _c19(ctx: EvalContext) -> tuple[str, list[Finding]]:
    scope = ctx.scope()
    failures: list[Finding] = []
    notes: list[Finding] = []
    for p in scope:
        technical = ctx.measures(p, "Technical")
        organizational = ctx.measures(p, "Organizational")
        if not technical:
            failures.append(Finding(p.id, "no technical measure is in place"))
        if not organizational:
            failures.append(Finding(p.id, "no organizational measure is in place"))
        for measure in technical + organizational:
            if measure.lastReviewedAt is None:
                notes.append(Finding(
                    measure.id, "measure has no recorded review date"))
        if technical and not any(m.kind == "DATA_PROTECTION" for m in technical):
            notes.append(Finding(
                p.id, "no measure declared for protection by design and default"))
    return _status(scope, failures, notes)


@rule("C20", (26,), "joint controllers settle and publish their arrangement")
def _c20(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        for actor in ctx.controllers(p):
            if actor.cls != "Joint_Controllers":
                continue
            instances.append(actor)
            if not actor.arrangementTransparent:
                failures.append(Finding(
                    actor.id, "joint controllers have not determined their "
                              "respective responsibilities transparently"))
            if not actor.arrangementAvailableToSubjects:
                failures.append(Finding(
                    actor.id, "the responsibility arrangement is not available "
                              "to data subjects"))
    return _status(instances, failures)


@rule("C21", (27,), "non-EU controllers and processors designate an EU representative")
def _c21(ctx: EvalContext) -> tuple[str, list[Finding]]:
    duties: dict[str, Actor] = {}
    for p in ctx.scope():
        special = bool(ctx.categories(p) & enums.SPECIAL_DATA_CATEGORIES)
        if not (p.largeScale or special or p.systematicMonitoring):
            continue  # occasional, low-risk processing is exempt
        for actor in ctx.actors(p):
            if not actor.countries or ctx.euro_link(actor):
                continue
            if actor.kind in PUBLIC_AUTHORITY_KINDS:
                continue
            duties[actor.id] = actor
    instances = [duties[i] for i in sorted(duties)]
    failures = [
        Finding(actor.id, "operates outside the EU without a representative "
                          "established in a member state")
        for actor in instances if not _represented_in_eu(ctx, actor)
    ]
    return _status(instances, failures)


def _represented_in_eu(ctx: EvalContext, actor: Actor) -> bool:
    for rep in ctx.graph.of_class("Representative"):
        if not isinstance(rep, Actor) or actor.id not in rep.represents:
            continue
        for node in ctx.graph.resolve(rep.countries):
            if isinstance(node, Country) and node.isEUMemberState:
                return True
    return False


@rule("C22", (28, 29), "processors act on documented instructions with safeguards",
      hooks=("V_processWithoutControllerInstructions",))
def _c22(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        if ctx.adapted_out("C22", p):
            continue
        processors = ctx.processors(p)
        if not processors:
            continue
        instances.extend(processors)
        technical = ctx.measures(p, "Technical")
        organizational = ctx.measures(p, "Organizational")
        for processor in processors:
            if not processor.instructions and not ctx.hook(
                    "V_processWithoutControllerInstructions", processor, p):
                failures.append(Finding(
                    processor.id, "processor acts without documented controller "
                                  "instructions"))
            if not technical or not organizational:
                failures.append(Finding(
                    processor.id, "processor-side technical and organizational "
                                  "safeguards are incomplete"))
    return _status(instances, failures)


@rule("C23", (30,), "records of processing activities complete per role")
def _c23(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    notes: list[Finding] = []
    for p in ctx.scope():
        roles = [(a, "controller") for a in ctx.controllers(p)]
        roles += [(a, "processor") for a in ctx.processors(p)]
        records = [r for r in ctx.graph.resolve(p.records)
                   if isinstance(r, RecordActivity)]
        for actor, role in roles:
            instances.append(actor)
            held = [r for r in records if r.holder == actor.id]
            if not held:
                failures.append(Finding(
                    actor.id, f"no record of processing activities held as {role} "
                              f"for processing {p.id}"))
                continue
            required = set(CONTROLLER_RECORD_ITEMS if role == "controller"
                           else PROCESSOR_RECORD_ITEMS)
            if p.transfers:
                required.add("THIRD_COUNTRY_TRANSFERS")
            best = max(held, key=lambda r: (len(set(r.items) & required), r.id))
            missing = required - set(best.items)
            if missing:
                failures.append(Finding(
                    best.id, "record is missing required content: "
                             + ", ".join(sorted(missing))))
            if not best.electronicForm:
                failures.append(Finding(
                    best.id, "record is not maintained in electronic form"))
            for item in sorted(RECORD_ITEMS_WHERE_POSSIBLE[role] - set(best.items)):
                notes.append(Finding(
                    best.id, f"optional record content absent: {item}"))
    return _status(instances, failures, notes)


@rule("C24", (31,), "cooperation with the supervisory authority on request")
def _c24(ctx: EvalContext) -> tuple[str, list[Finding]]:
    actors: dict[str, Actor] = {}
    for p in ctx.scope():
        for actor in ctx.actors(p):
            actors[actor.id] = actor
            for rep in ctx.graph.of_class("Representative"):
                if isinstance(rep, Actor) and actor.id in rep.represents:
                    actors[rep.id] = rep
    instances = [actors[i] for i in sorted(actors)]
    failures = [
        Finding(a.id, "refuses cooperation with the supervisory authority")
        for a in instances if not a.cooperatesWithSA
    ]
    return _status(instances, failures)


@rule("C25", (32,), "state-of-the-art security capabilities are in place")
def _c25(ctx: EvalContext) -> tuple[str, list[Finding]]:
    scope = ctx.scope()
    failures: list[Finding] = []
    for p in scope:
        technical_kinds = {m.kind for m in ctx.measures(p, "Technical")}
        organizational_kinds = {m.kind for m in ctx.measures(p, "Organizational")}
        missing = sorted(SECURITY_TECHNICAL_KINDS - technical_kinds)
        if missing:
            failures.append(Finding(
                p.id, "security capabilities missing: " + ", ".join(missing)))
        if "RUN_THE_CHECKING" not in technical_kinds \
                and "AUDIT" not in organizational_kinds:
            failures.append(Finding(
                p.id, "no process for regularly testing the measures"))
    return _status(scope, failures)


@rule("C26", (33, 34), "breach handling escalates with the associated risk")
def _c26(ctx: EvalContext) -> tuple[str, list[Finding]]:
    breaches = [b for b in ctx.graph.of_class("Breach") if isinstance(b, Breach)]
    failures: list[Finding] = []
    for breach in breaches:
        if not breach.recorded:
            failures.append(Finding(breach.id, "breach is not recorded"))
        detected = ctx.minutes(breach.detectedAt)
        if breach.risk in ("MEDIUM", "HIGH") and detected is not None:
            notified = ctx.minutes(breach.saNotifiedAt)
            deadline = detected + timebase.BREACH_NOTIFICATION_MINUTES
            if notified is None:
                if ctx.check_minutes > deadline and not breach.delayJustification:
                    failures.append(Finding(
                        breach.id, "supervisory authority not notified within "
                                   "72 hours and no justification recorded"))
            elif notified > deadline and not breach.delayJustification:
                failures.append(Finding(
                    breach.id, "notification exceeded the 72-hour window "
                               "without justification"))
        if breach.risk == "HIGH" and breach.subjectsCommunicatedAt is None:
            failures.append(Finding(
                breach.id, "high-risk breach not communicated to the subjects"))
        detector = ctx.graph.get(breach.detectedBy)
        if isinstance(detector, Actor) and detector.cls == "Data_Processor" \
                and breach.controllersInformedAt is None:
            failures.append(Finding(
                breach.id, "processor-detected breach: controllers were not "
                           "informed"))
    return _status(breaches, failures)


@rule("C27", (35,), "impact assessment present when mandated, with minimal content")
def _c27(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        special = bool(ctx.categories(p) & enums.SPECIAL_DATA_CATEGORIES)
        mandatory = (
            (p.automatedDecisionMaking and "PROFILING" in p.operations)
            or (p.largeScale and special)
            or (p.largeScale and p.systematicMonitoring)
        )
        dpia = ctx.graph.get(p.dpia) if p.dpia else None
        if not mandatory and dpia is None:
            continue
        instances.append(p)
        if mandatory and dpia is None:
            failures.append(Finding(
                p.id, "high-risk processing without an impact assessment"))
        if isinstance(dpia, DPIA):
            missing = DPIA_MINIMAL_CONTENT - set(dpia.information)
            if missing:
                failures.append(Finding(
                    dpia.id, "impact assessment lacks minimal content: "
                             + ", ".join(sorted(missing))))
    return _status(instances, failures)


@rule("C28", (36,), "prior consultation for residual high risk, advice on time")
def _c28(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        dpia = ctx.graph.get(p.dpia) if p.dpia else None
        if not isinstance(dpia, DPIA):
            continue
        consultation = dpia.consultation
        if dpia.residualRisk == "HIGH":
            instances.append(dpia)
            if consultation is None:
                failures.append(Finding(
                    dpia.id, "residual risk is high but the supervisory "
                             "authority was not consulted before processing"))
        elif consultation is not None:
            instances.append(dpia)
        if consultation is None:
            continue
        requested = ctx.minutes(consultation.requestedAt)
        advice = ctx.minutes(consultation.adviceAt)
        if requested is None:
            continue
        deadline = requested + timebase.CONSULTATION_ADVICE_MINUTES
        if consultation.extended:
            deadline += timebase.CONSULTATION_EXTENSION_MINUTES
        if advice is not None:
            if advice > deadline:
                failures.append(Finding(
                    dpia.id, "written advice arrived after the eight-week window "
                             "(and any notified six-week extension)"))
        elif ctx.check_minutes > deadline:
            failures.append(Finding(
                dpia.id, "consultation is still unanswered after the advice window"))
    return _status(instances, failures)


@rule("C29", (37, 38), "a data protection officer is designated when mandated",
      hooks=("V_bodiesMustDesignateDPO",))
def _c29(ctx: EvalContext) -> tuple[str, list[Finding]]:
    duties: dict[str, Actor] = {}
    for p in ctx.scope():
        special_or_criminal = bool(
            ctx.categories(p) & (enums.SPECIAL_DATA_CATEGORIES | {"JUDICIAL"}))
        for actor in ctx.actors(p):
            must = (
                actor.kind in PUBLIC_AUTHORITY_KINDS
                or (p.largeScale and p.systematicMonitoring)
                or (p.largeScale and special_or_criminal)
            )
            if not must:
                must = ctx.hook("V_bodiesMustDesignateDPO", actor)
            if must:
                duties[actor.id] = actor
    instances = [duties[i] for i in sorted(duties)]
    failures = [
        Finding(actor.id, "no data protection officer is designated")
        for actor in instances if not ctx.dpo_designated_for(actor.id)
    ]
    return _status(instances, failures)


@rule("C30", (42,), "certifications are voluntary, transparent, accredited, "
                    "and at most three years old")
def _c30(ctx: EvalContext) -> tuple[str, list[Finding]]:
    certifications = [c for c in ctx.graph.of_class("Certification")
                      if isinstance(c, Certification)]
    failures: list[Finding] = []
    for cert in certifications:
        if not cert.voluntary:
            failures.append(Finding(cert.id, "certification is not voluntary"))
        if not cert.processTransparent:
            failures.append(Finding(
                cert.id, "certification process is not transparent"))
        if not cert.bodyAccredited:
            failures.append(Finding(
                cert.id, "issuing body is not accredited"))
        issued = ctx.minutes(cert.issuedAt)
        if issued is not None and \
                ctx.check_minutes - issued > timebase.CERTIFICATION_VALIDITY_MINUTES:
            failures.append(Finding(
                cert.id, "certification is older than its three-year validity"))
    return _status(certifications, failures)


# ---------------------------------------------------------------------------
# Chapter V and sanctions
# ---------------------------------------------------------------------------

def _transfer_pairs(ctx: EvalContext) -> list[tuple[DataProcessing, DataTransfer]]:
    out: list[tuple[DataProcessing, DataTransfer]] = []
    for p in ctx.scope():
        for node in ctx.graph.resolve(p.transfers):
            if isinstance(node, DataTransfer):
                out.append((p, node))
    return out


def _transfer_findings(ctx: EvalContext, p: DataProcessing,
                       transfer: DataTransfer) -> list[Finding]:
    basis = transfer.basis
    out: list[Finding] = []
    if basis.kind == "IntraEU":
        to = ctx.graph.get(transfer.toCountry)
        if not (isinstance(to, Country) and (to.isEUMemberState or to.EULawApplies)):
            out.append(Finding(
                transfer.id, "declared intra-EU but the destination is outside "
                             "EU law"))
    elif basis.kind == "BCR":
        if not basis.approved:
            out.append(Finding(
                transfer.id, "binding corporate rules are not approved"))
    elif basis.kind == "StandardContractualClauses":
        if not basis.approved:
            out.append(Finding(
                transfer.id, "standard contractual clauses are not approved"))
    elif basis.kind == "AdministrativeArrangement":
        if not basis.authorized:
            out.append(Finding(
                transfer.id, "administrative arrangement lacks authorization"))
    elif basis.kind == "PublicBodyInstrument":
        if not basis.authorized:
            out.append(Finding(
                transfer.id, "public-body instrument lacks authorization"))
    elif basis.kind == "Derogation":
        if basis.derogation in ("SUPPORTED_BY_CONSENT", "NECESSARY_FOR_CONTRACT"):
            if any(a.kind in PUBLIC_AUTHORITY_KINDS for a in ctx.controllers(p)):
                out.append(Finding(
                    transfer.id, f"derogation {basis.derogation} is not open to "
                                 "public authorities"))
        elif basis.derogation == "OTHER":
            if not basis.details:
                out.append(Finding(
                    transfer.id, "residual derogation without the documented "
                                 "supervisory-authority authorization"))
    # AdequacyDecision and CodeOfConductOrCertification carry no extra flags.
    return out


@rule("C31", (44, 45, 46, 49, 50), "every cross-border transfer rests on a "
                                   "valid legal ground")
def _c31(ctx: EvalContext) -> tuple[str, list[Finding]]:
    pairs = _transfer_pairs(ctx)
    failures: list[Finding] = []
    for p, transfer in pairs:
        failures.extend(_transfer_findings(ctx, p, transfer))
    return _status(pairs, failures)


def check_transfer_legality(graph: InstanceGraph, profile,
                            check_date: str | None = None,
                            strict: bool = False) -> RuleVerdict:
    """Standalone evaluation of the transfer-legality rule."""
    return evaluate_rule("C31", graph, profile, check_date=check_date, strict=strict)


@rule("C32", (45,), "partial adequacy decisions come with satisfaction evidence")
def _c32(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for _p, transfer in _transfer_pairs(ctx):
        basis = transfer.basis
        if basis.kind != "AdequacyDecision" or not basis.additionalRequirements:
            continue
        instances.append(transfer)
        if not basis.evidence:
            failures.append(Finding(
                transfer.id, "additional adequacy requirements without evidence "
                             "of their satisfaction"))
    return _status(instances, failures)


@rule("C33", (48,), "third-country judgments honored only under an "
                    "international agreement")
def _c33(ctx: EvalContext) -> tuple[str, list[Finding]]:
    judgments = ctx.generic_nodes("Judgment")
    failures: list[Finding] = []
    for node in judgments:
        if node.attrs.get("recognized") and not node.attrs.get(
                "basedOnInternationalAgreement"):
            failures.append(Finding(
                node.id, "third-country judgment recognized without an "
                         "international agreement such as a mutual legal "
                         "assistance treaty"))
    return _status(judgments, failures)


@rule("C34", (47,), "binding corporate rules are binding and complete")
def _c34(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for _p, transfer in _transfer_pairs(ctx):
        basis = transfer.basis
        if basis.kind != "BCR":
            continue
        instances.append(transfer)
        if not basis.legallyBinding:
            failures.append(Finding(
                transfer.id, "corporate rules are not legally binding on every "
                             "member"))
        missing = BCR_MANDATORY_INFORMATION - set(basis.information)
        if missing:
            failures.append(Finding(
                transfer.id, "corporate rules are missing mandatory information: "
                             + ", ".join(sorted(missing))))
    return _status(instances, failures)


def compute_max_fine(kind: str | Infringement,
                     turnover_cents: int | TurnoverContext) -> int:
    """Maximum administrative fine in euro cents for an infringement kind.

    Tier one applies the 10M-or-2% ceiling, tier two 20M-or-4%. Accepts the
    domain objects directly or the raw (kind, turnover-in-cents) pair.
    """
    if isinstance(kind, Infringement):
        kind = kind.kind
    if isinstance(turnover_cents, TurnoverContext):
        turnover_cents = turnover_cents.worldwideAnnualTurnoverEUR * 100
    if turnover_cents < 0:
        raise ValueError("turnover must be non-negative")
    if kind in FINE_TIER1_KINDS:
        return timebase.max_fine_cents(
            timebase.FINE_TIER1_FLOOR_CENTS,
            timebase.FINE_TIER1_TURNOVER_PERCENT, turnover_cents)
    if kind in FINE_TIER2_KINDS:
        return timebase.max_fine_cents(
            timebase.FINE_TIER2_FLOOR_CENTS,
            timebase.FINE_TIER2_TURNOVER_PERCENT, turnover_cents)
    raise FineClassificationError(
        f"infringement kind {kind!r} has no administrative-fine tier")


def _turnover_cents_for(ctx: EvalContext, infringement: Infringement) -> int:
    node = None
    if infringement.turnover:
        node = ctx.graph.get(infringement.turnover)
    else:
        contexts = [n for n in ctx.graph.of_class("Turnover_Context")
                    if isinstance(n, TurnoverContext)]
        if len(contexts) == 1:
            node = contexts[0]
    if isinstance(node, TurnoverContext):
        return node.worldwideAnnualTurnoverEUR * 100
    return 0


def _fine_findings(ctx: EvalContext, infringement: Infringement,
                   cap_cents: int | None = None) -> tuple[list[Finding], list[Finding]]:
    """(failures, notes) for one recorded infringement."""
    try:
        ceiling = compute_max_fine(infringement.kind,
                                   _turnover_cents_for(ctx, infringement))
    except FineClassificationError:
        return [], [Finding(
            infringement.id,
            f"kind {infringement.kind} is outside both administrative-fine tiers")]
    if cap_cents is not None:
        ceiling = min(ceiling, cap_cents)
    notes = [Finding(
        infringement.id,
        f"maximum administrative fine: {ceiling // 100} EUR")]
    failures: list[Finding] = []
    if infringement.imposedFineEUR is not None \
            and infringement.imposedFineEUR * 100 > ceiling:
        failures.append(Finding(
            infringement.id,
            f"recorded fine of {infringement.imposedFineEUR} EUR exceeds the "
            f"maximum of {ceiling // 100} EUR"))
    return failures, notes


@rule("C35", (83,), "administrative fines stay within the two statutory ceilings")
def _c35(ctx: EvalContext) -> tuple[str, list[Finding]]:
    infringements = [n for n in ctx.graph.of_class("Infringement")
                     if isinstance(n, Infringement)]
    failures: list[Finding] = []
    notes: list[Finding] = []
    for infringement in infringements:
        bad, info = _fine_findings(ctx, infringement)
        failures.extend(bad)
        notes.extend(info)
    return _status(infringements, failures, notes)


# ---------------------------------------------------------------------------
# Variation-point rules (activated by resolutions)
# ---------------------------------------------------------------------------

@variation_rule("V1", (8,), "national minimum consent age per residence country",
                hooks=("V_getMinimumAgeForDS", "V_checkParentDocuments"))
def _v1(ctx: EvalContext) -> tuple[str, list[Finding]]:
    return _c5(ctx)


@variation_rule("V2", (8,), "parental responsibility proven by accepted documents",
                hooks=("V_checkParentDocuments",))
def _v2(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        consent = ctx.consent_of(p)
        if consent is None:
            continue
        giver = ctx.graph.get(consent.givenBy)
        if not isinstance(giver, ResponsibleParent):
            continue
        instances.append(giver)
        if not ctx.hook("V_checkParentDocuments", giver):
            failures.append(Finding(
                giver.id, "no valid document of an accepted kind proves "
                          "parental responsibility"))
    return _status(instances, failures)


@variation_rule("V4", (9,), "national conditions on genetic, biometric, and "
                            "health data", hooks=("V_verifyFurtherConditionsAndLimit",))
def _v4(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V4") or {}
    restricted = set(params.get("restrictedCategories",
                                ("GENETIC", "BIOMETRIC", "HEALTH")))
    required = set(params.get("requiredTechnicalMeasures", ()))
    prohibited = bool(params.get("prohibited", False))
    instances = [p for p in ctx.scope() if ctx.categories(p) & restricted]
    failures: list[Finding] = []
    for p in instances:
        hit = sorted(ctx.categories(p) & restricted)
        if prohibited:
            failures.append(Finding(
                p.id, "processing of " + ", ".join(hit)
                      + " is prohibited by national law"))
            continue
        kinds = {m.kind for m in ctx.measures(p, "Technical")}
        missing = sorted(required - kinds)
        if missing:
            failures.append(Finding(
                p.id, "national conditions unmet, measures missing: "
                      + ", ".join(missing)))
    return _status(instances, failures)


@variation_rule("V7", (32,), "persons under authority process only on instructions",
                hooks=("V_processWithoutControllerInstructions",))
def _v7(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        for processor in ctx.processors(p):
            instances.append(processor)
            if not processor.instructions and not ctx.hook(
                    "V_processWithoutControllerInstructions", processor, p):
                failures.append(Finding(
                    processor.id, "person acting under authority processes "
                                  "without controller instructions"))
    return _status(instances, failures)


@variation_rule("V8", (36,), "impact assessments document the reconciliation "
                             "with freedom of expression",
                hooks=("V_ReconcileByLaw",))
def _v8(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V8") or {}
    wanted_types = params.get("requiredForProcessingTypes")
    instances: list = []
    failures: list[Finding] = []
    for p in ctx.scope():
        if wanted_types and p.type not in wanted_types:
            continue
        dpia = ctx.graph.get(p.dpia) if p.dpia else None
        if not isinstance(dpia, DPIA):
            continue
        instances.append(dpia)
        if "RECONCILIATION_ASSESSMENT" not in dpia.information:
            failures.append(Finding(
                dpia.id, "no reconciliation assessment with the freedom of "
                         "expression and information"))
    return _status(instances, failures)


@variation_rule("V10", (49,), "national limits on transfers of specific categories",
                hooks=("V_verifyTransferLimits",))
def _v10(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V10") or {}
    limits = params.get("limits", ())
    instances: list = []
    failures: list[Finding] = []
    for p, transfer in _transfer_pairs(ctx):
        if transfer.basis.kind in ("IntraEU", "AdequacyDecision"):
            continue
        to = ctx.graph.get(transfer.toCountry)
        code = to.code if isinstance(to, Country) else None
        instances.append(transfer)
        for limit in limits:
            categories = set(limit.get("categories", ()))
            countries = set(limit.get("toCountries", ()))
            if categories and not (ctx.categories(p) & categories):
                continue
            if countries and code not in countries:
                continue
            failures.append(Finding(
                transfer.id, "transfer exceeds a national limit on "
                             + ", ".join(sorted(categories or {"all categories"}))))
            break
    return _status(instances, failures)


@variation_rule("V11", (80,), "complaints lodged by representative bodies")
def _v11(ctx: EvalContext) -> tuple[str, list[Finding]]:
    complaints = [n for n in ctx.generic_nodes("Complaint")
                  if n.attrs.get("lodgedByBody")]
    failures = [
        Finding(n.id, "the lodging body does not meet the national mandate "
                      "conditions")
        for n in complaints if not n.attrs.get("bodyAuthorized")
    ]
    return _status(complaints, failures)


@variation_rule("V12_1", (83,), "fine ceilings for private organizations")
def _v12_1(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances: list = []
    failures: list[Finding] = []
    notes: list[Finding] = []
    for infringement in ctx.graph.of_class("Infringement"):
        if not isinstance(infringement, Infringement):
            continue
        actor = ctx.graph.get(infringement.by) if infringement.by else None
        if isinstance(actor, Actor) and actor.kind in PUBLIC_AUTHORITY_KINDS:
            continue
        instances.append(infringement)
        bad, info = _fine_findings(ctx, infringement)
        failures.extend(bad)
        notes.extend(info)
    return _status(instances, failures, notes)


@variation_rule("V12_2", (83,), "national fine regime for public authorities")
def _v12_2(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V12") or {}
    applies = bool(params.get("finesApplyToPublicBodies", True))
    cap = params.get("publicBodyFineCapEUR")
    cap_cents = int(cap) * 100 if cap is not None else None
    instances: list = []
    failures: list[Finding] = []
    notes: list[Finding] = []
    for infringement in ctx.graph.of_class("Infringement"):
        if not isinstance(infringement, Infringement):
            continue
        actor = ctx.graph.get(infringement.by) if infringement.by else None
        if not (isinstance(actor, Actor) and actor.kind in PUBLIC_AUTHORITY_KINDS):
            continue
        instances.append(infringement)
        if not applies:
            if infringement.imposedFineEUR:
                failures.append(Finding(
                    infringement.id, "administrative fines do not apply to "
                                     "public bodies in this member state"))
            else:
                notes.append(Finding(
                    infringement.id, "no administrative fine applicable to a "
                                     "public body"))
            continue
        bad, info = _fine_findings(ctx, infringement, cap_cents)
        failures.extend(bad)
        notes.extend(info)
    return _status(instances, failures, notes)


@variation_rule("V13", (84,), "additional national penalties by infringement kind")
def _v13(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V13") or {}
    penalties = {entry["infringementKind"]: entry["penaltyEUR"]
                 for entry in params.get("penalties", ())}
    instances: list = []
    notes: list[Finding] = []
    for infringement in ctx.graph.of_class("Infringement"):
        if not isinstance(infringement, Infringement):
            continue
        if infringement.kind in penalties:
            instances.append(infringement)
            notes.append(Finding(
                infringement.id,
                f"national penalty applicable up to "
                f"{penalties[infringement.kind]} EUR"))
    return _status(instances, [], notes)


@variation_rule("V14", (85,), "prior authorization for public-interest processing")
def _v14(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V14") or {}
    wanted = set(params.get("processingTypes", ("PUBLIC_INTEREST", "PUBLIC_HEALTH")))
    instances = [p for p in ctx.scope() if p.type in wanted]
    failures: list[Finding] = []
    for p in instances:
        granted = any(n.attrs.get("granted")
                      for n in ctx.evidence_nodes("Authorization", "processing", p.id))
        if not granted:
            failures.append(Finding(
                p.id, "no prior supervisory-authority authorization on record"))
    return _status(instances, failures)


@variation_rule("V15", (87,), "conditions on processing national identifiers",
                hooks=("V_checkedIDProcessing",))
def _v15(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V15") or {}
    allowed = bool(params.get("allowed", True))
    required = set(params.get("requiredTechnicalMeasures", ()))
    instances = [p for p in ctx.scope() if "IDENTIFICATION" in ctx.categories(p)]
    failures: list[Finding] = []
    for p in instances:
        if not allowed:
            failures.append(Finding(
                p.id, "processing of national identifiers is not permitted"))
            continue
        kinds = {m.kind for m in ctx.measures(p, "Technical")}
        missing = sorted(required - kinds)
        if missing:
            failures.append(Finding(
                p.id, "identifier processing lacks required measures: "
                      + ", ".join(missing)))
    return _status(instances, failures)


def _derogation_note_rule(ctx: EvalContext, variation_id: str,
                          instances: list[DataProcessing]) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params(variation_id) or {}
    rights = sorted(params.get("derogatedRights", ()))
    notes = [
        Finding(p.id, "national derogation applied to: " + ", ".join(rights))
        for p in instances if rights
    ]
    return _status(instances, [], notes)


@variation_rule("V17", (89,), "right derogations for research and statistics",
                hooks=("V_checkDerrogationsFromRights",))
def _v17(ctx: EvalContext) -> tuple[str, list[Finding]]:
    params = ctx.resolution_params("V17") or {}
    wanted = set(params.get("processingTypes", ("RESEARCH", "STATISTICAL_PURPOSES")))
    instances = [p for p in ctx.scope() if p.type in wanted]
    return _derogation_note_rule(ctx, "V17", instances)


@variation_rule("V18", (89,), "right derogations for public-interest archiving",
                hooks=("V_checkDerrogationsFromRights",))
def _v18(ctx: EvalContext) -> tuple[str, list[Finding]]:
    instances = [p for p in ctx.scope() if "ARCHIVING" in p.operations]
    return _derogation_note_rule(ctx, "V18", instances)


@variation_rule("V19", (90,), "supervisory powers against secrecy-bound "
                              "controllers stay within national limits",
                hooks=("V_checkDerrogationsFromRights",))
def _v19(ctx: EvalContext) -> tuple[str, list[Finding]]:
    tasks = [n for n in ctx.generic_nodes("Investigation_Task")
             if n.attrs.get("involvesSecretData")]
    failures = [
        Finding(n.id, "investigation reaches data under professional secrecy "
                      "without respecting the national limits")
        for n in tasks if not n.attrs.get("secrecyRespected")
    ]
    return _status(tasks, failures)


@variation_rule("V20", (91,), "church data-protection regimes aligned with the "
                              "regulation")
def _v20(ctx: EvalContext) -> tuple[str, list[Finding]]:
    churches: dict[str, Actor] = {}
    for p in ctx.scope():
        for actor in ctx.actors(p):
            if actor.kind == "CHURCH_OR_RELIGIOUS_ORGANIZATION":
                churches[actor.id] = actor
    instances = [churches[i] for i in sorted(churches)]
    failures: list[Finding] = []
    for actor in instances:
        aligned = any(n.attrs.get("alignedWithGDPR")
                      for n in ctx.evidence_nodes("Code_Of_Conduct", "holder", actor.id))
        if not aligned:
            failures.append(Finding(
                actor.id, "comprehensive church rules are not brought in line "
                          "with the regulation"))
    return _status(instances, failures)


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------

def _run_rule(spec: RuleSpec, ctx: EvalContext) -> RuleVerdict:
    ctx.begin_rule()
    status, findings = spec.predicate(ctx)
    defaulted = tuple(sorted(ctx.defaulted_hooks))
    if ctx.strict and defaulted:
        # Any verdict shaped by a defaulted hook is uncertain, including
        # NotApplicable: a resolution could have made the rule bite.
        findings = [Finding("", f"verdict depends on unresolved hook {name}")
                    for name in defaulted]
        status = UNKNOWN
    return RuleVerdict(
        ruleId=spec.id,
        status=status,
        articles=spec.articles,
        findings=tuple(findings),
        hookDependencies=defaulted,
    )


def _gate_verdict(spec: RuleSpec) -> RuleVerdict:
    return RuleVerdict(spec.id, NOT_APPLICABLE, spec.articles, ())


def evaluate_rule(rule_id: str, graph: InstanceGraph, profile,
                  check_date: str | None = None,
                  strict: bool = False) -> RuleVerdict:
    """Evaluate one active rule; the C1 gate is applied first."""
    specs = _active_specs(profile)
    if rule_id not in specs:
        raise UnknownRuleError(rule_id)
    minutes = None if check_date is None else timebase.parse_minutes(check_date)
    ctx = EvalContext(graph, profile, minutes, strict)
    if rule_id != "C1" and "C1" in specs:
        gate = _run_rule(specs["C1"], ctx)
        if gate.status == NOT_APPLICABLE:
            return _gate_verdict(specs[rule_id])
    return _run_rule(specs[rule_id], ctx)


def _active_specs(profile) -> dict[str, RuleSpec]:
    if profile is None:
        return dict(RULE_CATALOG)
    return {spec.id: spec for spec in profile.rules()}


@dataclass(frozen=True)
class ComplianceReport:
    verdicts: tuple[RuleVerdict, ...]
    profileFingerprint: str
    graphFingerprint: str
    checkDate: str
    summary: Mapping[str, int]
    audit: tuple[Mapping[str, str], ...] = ()

    def counts(self) -> dict[str, int]:
        return dict(self.summary)

    def to_payload(self) -> dict:
        return {
            "schemaVersion": "1",
            "checkDate": self.checkDate,
            "graphFingerprint": self.graphFingerprint,
            "profileFingerprint": self.profileFingerprint,
            "verdicts": [v.to_payload() for v in self.verdicts],
            "summary": dict(self.summary),
            "audit": [dict(entry) for entry in self.audit],
        }


def evaluate_all(graph: InstanceGraph, profile,
                 check_date: str | None = None,
                 strict: bool = False) -> ComplianceReport:
    """One verdict per active rule, in catalog order, deterministically."""
    if profile is None:
        raise ProfileNotFinalizedError("a finalized profile is required")
    if not profile.finalized:
        raise ProfileNotFinalizedError("profile must be finalized before evaluation")

    minutes = None if check_date is None else timebase.parse_minutes(check_date)
    ctx = EvalContext(graph, profile, minutes, strict)
    specs = sorted(profile.rules(), key=lambda s: rule_sort_key(s.id))

    gate_passed = True
    verdicts: list[RuleVerdict] = []
    for spec in specs:
        if spec.id == "C1":
            verdict = _run_rule(spec, ctx)
            gate_passed = verdict.status != NOT_APPLICABLE
            verdicts.append(verdict)

    for spec in specs:
        if spec.id == "C1":
            continue
        verdicts.append(_run_rule(spec, ctx) if gate_passed
                        else _gate_verdict(spec))

    verdicts.sort(key=lambda v: rule_sort_key(v.ruleId))
    summary = {status: 0 for status in STATUSES}
    for verdict in verdicts:
        summary[verdict.status] += 1

    from .ingest import graph_fingerprint  # local import avoids a cycle

    return ComplianceReport(
        verdicts=tuple(verdicts),
        profileFingerprint=profile.fingerprint(),
        graphFingerprint=graph_fingerprint(graph),
        checkDate=_minutes_to_iso(ctx.check_minutes),
        summary=summary,
        audit=tuple(dict(e) for e in profile.resolution_table_payload()),
    )


def _minutes_to_iso(minutes: int) -> str:
    from datetime import datetime, timezone

    stamp = datetime.fromtimestamp(minutes * 60, tz=timezone.utc)
    return stamp.strftime("%Y-%m-%dT%H:%M:%SZ")
