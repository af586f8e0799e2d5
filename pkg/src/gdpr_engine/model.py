"""Typed domain model and instance-graph container.

Every object carries its concrete model class name in ``cls`` and holds
references as object ids; traversal goes through the owning InstanceGraph.
Field names deliberately mirror the wire schema (camelCase) so instance
documents, in-memory objects, and findings all speak the same vocabulary.

Graphs are immutable after construction and safe for concurrent reads.
Structural checking is split in two: ``validate_graph`` returns integrity
violations as data (it never raises), while the ingestion layer decides
whether violations abort a load.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator, Mapping, Sequence

from . import enums
from .registry import ABSTRACT_CLASSES, TRACEABILITY
from .timebase import TimestampError, parse_minutes

DEFAULT_CHILD_AGE_LIMIT = 16

ACTOR_CLASSES = frozenset({
    "Data_Controller",
    "Data_Processor",
    "Joint_Controllers",
    "Representative",
    "Data_Protection_Officer",
    "Supervisory_Authority",
    "Certification_Body",
    "Recipient",
    "Third_Party",
    "Undertaking",
})
SUBJECT_CLASSES = frozenset({"Data_Subject", "Child_Data_Subject"})
MEASURE_CLASSES = frozenset({"Technical", "Organizational"})
CONSENT_GIVER_CLASSES = SUBJECT_CLASSES | {"Responsible_Parent"}

# Classes whose objects get a dedicated dataclass; everything else in the
# registry is instantiated as a GenericNode with open attributes.
TYPED_CLASSES = (
    frozenset({
        "Country",
        "Document",
        "Responsible_Parent",
        "Personal_Data",
        "Purpose",
        "Consent",
        "Data_Processing",
        "Right_Support",
        "Right_Request",
        "Record_Activity",
        "Data_Protection_Impact_Assessment",
        "Breach",
        "Data_Transfer",
        "Certification",
        "Infringement",
        "Turnover_Context",
    })
    | ACTOR_CLASSES
    | SUBJECT_CLASSES
    | MEASURE_CLASSES
)


@dataclass(frozen=True)
class Node:
    id: str
    cls: str


@dataclass(frozen=True)
class Country(Node):
    code: str = ""
    isEUMemberState: bool = False
    EULawApplies: bool = False


@dataclass(frozen=True)
class DataSubject(Node):
    ageYears: int = 0
    residence: str = ""  # Country id


@dataclass(frozen=True)
class ResponsibleParent(Node):
    documents: tuple[str, ...] = ()
    responsibleFor: tuple[str, ...] = ()


@dataclass(frozen=True)
class Document(Node):
    kind: str = ""
    valid: bool = False


@dataclass(frozen=True)
class PersonalData(Node):
    categories: tuple[str, ...] = ()
    subjects: tuple[str, ...] = ()
    identifiesSubject: bool = False
    collectedDirectlyFromSubject: bool = True
    source: str = ""


@dataclass(frozen=True)
class Purpose(Node):
    description: str = ""
    legalBasis: str = "NONE"
    obligationSource: str | None = None


@dataclass(frozen=True)
class Consent(Node):
    givenBy: str = ""
    givenFor: tuple[str, ...] = ()
    freelyGiven: bool = False
    specific: bool = False
    informed: bool = False
    unambiguous: bool = False
    affirmativeAction: bool = False
    withdrawable: bool = False
    distinguishable: bool = False
    explicit: bool = False
    withdrawnAt: str | None = None


@dataclass(frozen=True)
class Actor(Node):
    kind: str = "LEGAL_PERSON"
    countries: tuple[str, ...] = ()
    contactDetails: str = ""
    cooperatesWithSA: bool = True
    instructions: tuple[str, ...] = ()       # Data_Processor
    represents: tuple[str, ...] = ()         # Representative
    designatedBy: tuple[str, ...] = ()       # Data_Protection_Officer
    arrangementTransparent: bool = False     # Joint_Controllers
    arrangementAvailableToSubjects: bool = False


@dataclass(frozen=True)
class RightSupport(Node):
    right: str = ""
    enabled: bool = False
    requests: tuple[str, ...] = ()


@dataclass(frozen=True)
class RightRequest(Node):
    receivedAt: str = ""
    respondedAt: str | None = None
    granted: bool = False
    denialReason: str | None = None
    extensionNotified: bool = False
    identityVerified: bool = False
    free: bool = True


@dataclass(frozen=True)
class SecurityMeasure(Node):
    kind: str = ""
    description: str = ""
    lastReviewedAt: str | None = None


@dataclass(frozen=True)
class RecordActivity(Node):
    holder: str = ""
    items: tuple[str, ...] = ()
    electronicForm: bool = True


@dataclass(frozen=True)
class Consultation:
    requestedAt: str
    adviceAt: str | None = None
    extended: bool = False


@dataclass(frozen=True)
class DPIA(Node):
    motivations: tuple[str, ...] = ()
    information: tuple[str, ...] = ()
    residualRisk: str = "LOW"
    consultation: Consultation | None = None


@dataclass(frozen=True)
class Breach(Node):
    processing: str = ""
    risk: str = "LOW"
    detectedBy: str = ""
    detectedAt: str = ""
    recorded: bool = False
    saNotifiedAt: str | None = None
    delayJustification: str | None = None
    subjectsCommunicatedAt: str | None = None
    controllersInformedAt: str | None = None


@dataclass(frozen=True)
class TransferBasis:
    kind: str
    additionalRequirements: tuple[str, ...] = ()   # AdequacyDecision
    evidence: tuple[str, ...] = ()                 # AdequacyDecision
    information: tuple[str, ...] = ()              # BCR
    approved: bool = False                         # BCR / SCC
    legallyBinding: bool = False                   # BCR
    authorized: bool = False                       # arrangement / instrument
    derogation: str | None = None                  # Derogation
    details: str = ""                              # Derogation


@dataclass(frozen=True)
class DataTransfer(Node):
    fromCountry: str = ""
    toCountry: str = ""
    onward: bool = False
    basis: TransferBasis = field(default_factory=lambda: TransferBasis("IntraEU"))


@dataclass(frozen=True)
class Certification(Node):
    holder: str = ""
    issuedBy: str = ""
    bodyAccredited: bool = False
    issuedAt: str = ""
    processTransparent: bool = False
    voluntary: bool = False


@dataclass(frozen=True)
class Infringement(Node):
    kind: str = "OTHER"
    by: str | None = None
    imposedFineEUR: int | None = None
    turnover: str | None = None


@dataclass(frozen=True)
class TurnoverContext(Node):
    worldwideAnnualTurnoverEUR: int = 0


@dataclass(frozen=True)
class DataProcessing(Node):
    personalData: tuple[str, ...] = ()
    purposes: tuple[str, ...] = ()
    type: str = "OTHER"
    operations: tuple[str, ...] = ()
    consent: str | None = None
    controllers: tuple[str, ...] = ()
    processors: tuple[str, ...] = ()
    recipients: tuple[str, ...] = ()
    securityMeasures: tuple[str, ...] = ()
    supportedRights: tuple[str, ...] = ()
    records: tuple[str, ...] = ()
    dpia: str | None = None
    transfers: tuple[str, ...] = ()
    automatedDecisionMaking: bool = False
    largeScale: bool = False
    systematicMonitoring: bool = False
    specialCategoriesException: str | None = None
    informationProvided: tuple[str, ...] = ()
    informationExemption: str | None = None
    rightsExempt: bool = False


@dataclass(frozen=True)
class GenericNode(Node):
    attrs: Mapping[str, object] = field(default_factory=dict)
    refs: Mapping[str, tuple[str, ...]] = field(default_factory=dict)


DATACLASS_FOR: dict[str, type[Node]] = {
    "Country": Country,
    "Data_Subject": DataSubject,
    "Child_Data_Subject": DataSubject,
    "Responsible_Parent": ResponsibleParent,
    "Document": Document,
    "Personal_Data": PersonalData,
    "Purpose": Purpose,
    "Consent": Consent,
    "Data_Processing": DataProcessing,
    "Right_Support": RightSupport,
    "Right_Request": RightRequest,
    "Technical": SecurityMeasure,
    "Organizational": SecurityMeasure,
    "Record_Activity": RecordActivity,
    "Data_Protection_Impact_Assessment": DPIA,
    "Breach": Breach,
    "Data_Transfer": DataTransfer,
    "Certification": Certification,
    "Infringement": Infringement,
    "Turnover_Context": TurnoverContext,
}
for _actor_cls in ACTOR_CLASSES:
    DATACLASS_FOR[_actor_cls] = Actor
del _actor_cls


# ---------------------------------------------------------------------------
# Field specifications: one table drives parsing, serialization, enum checks
# and referential integrity, so they cannot drift apart.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AttrSpec:
    name: str
    kind: str               # "str" | "bool" | "int" | "ts" | "strlist"
    required: bool = False
    optional: bool = False  # value may be absent/None
    enum: str | None = None
    many: bool = False      # list of enum literals / strings
    nonneg: bool = False


@dataclass(frozen=True)
class RefSpec:
    name: str
    targets: frozenset[str] | None   # None: any registered class
    many: bool = False
    required: bool = False
    py: str | None = None            # dataclass field when it differs

    @property
    def field_name(self) -> str:
        return self.py or self.name


def _a(*args, **kw) -> AttrSpec:
    return AttrSpec(*args, **kw)


def _r(*args, **kw) -> RefSpec:
    return RefSpec(*args, **kw)


_ACTOR_BASE_ATTRS = (
    _a("kind", "str", required=True, enum=enums.ACTOR_TYPE),
    _a("contactDetails", "str"),
    _a("cooperatesWithSA", "bool"),
)

CLASS_ATTRS: dict[str, tuple[AttrSpec, ...]] = {
    "Country": (
        _a("code", "str", required=True),
        _a("isEUMemberState", "bool"),
        _a("EULawApplies", "bool"),
    ),
    "Data_Subject": (_a("ageYears", "int", required=True, nonneg=True),),
    "Child_Data_Subject": (_a("ageYears", "int", required=True, nonneg=True),),
    "Responsible_Parent": (),
    "Document": (_a("kind", "str", required=True), _a("valid", "bool")),
    "Personal_Data": (
        _a("categories", "str", many=True, enum=enums.DATA_CATEGORY),
        _a("identifiesSubject", "bool"),
        _a("collectedDirectlyFromSubject", "bool"),
        _a("source", "str"),
    ),
    "Purpose": (
        _a("description", "str"),
        _a("legalBasis", "str", required=True, enum=enums.LAWFULNESS_SOURCES),
        _a("obligationSource", "str", optional=True),
    ),
    "Consent": (
        _a("freelyGiven", "bool"),
        _a("specific", "bool"),
        _a("informed", "bool"),
        _a("unambiguous", "bool"),
        _a("affirmativeAction", "bool"),
        _a("withdrawable", "bool"),
        _a("distinguishable", "bool"),
        _a("explicit", "bool"),
        _a("withdrawnAt", "ts", optional=True),
    ),
    "Data_Processing": (
        _a("type", "str", required=True, enum=enums.PROCESSING_CONTEXT),
        _a("operations", "str", many=True, enum=enums.OPERATION_TYPE),
        _a("automatedDecisionMaking", "bool"),
        _a("largeScale", "bool"),
        _a("systematicMonitoring", "bool"),
        _a("specialCategoriesException", "str", optional=True,
           enum=enums.EXCEPTION_SPECIAL_DATA_CATEGORY),
        _a("informationProvided", "str", many=True, enum=enums.INFORMATION_TYPE),
        _a("informationExemption", "str", optional=True,
           enum=enums.INFORMATION_EXEMPTION),
        _a("rightsExempt", "bool"),
    ),
    "Right_Support": (
        _a("right", "str", required=True, enum=enums.RIGHT_KIND),
        _a("enabled", "bool"),
    ),
    "Right_Request": (
        _a("receivedAt", "ts", required=True),
        _a("respondedAt", "ts", optional=True),
        _a("granted", "bool"),
        _a("denialReason", "str", optional=True),
        _a("extensionNotified", "bool"),
        _a("identityVerified", "bool"),
        _a("free", "bool"),
    ),
    "Technical": (
        _a("kind", "str", required=True, enum=enums.TECHNICAL_MEASURE_TYPE),
        _a("description", "str"),
        _a("lastReviewedAt", "ts", optional=True),
    ),
    "Organizational": (
        _a("kind", "str", required=True, enum=enums.ORGANIZATIONAL_MEASURE_TYPE),
        _a("description", "str"),
        _a("lastReviewedAt", "ts", optional=True),
    ),
    "Record_Activity": (
        _a("items", "str", many=True, enum=enums.RECORD_ITEM),
        _a("electronicForm", "bool"),
    ),
    "Data_Protection_Impact_Assessment": (
        _a("motivations", "str", many=True, enum=enums.DPIA_MOTIVATION),
        _a("information", "str", many=True, enum=enums.DPIA_INFORMATION_TYPE),
        _a("residualRisk", "str", required=True, enum=enums.RISK_SEVERITY),
    ),
    "Breach": (
        _a("risk", "str", required=True, enum=enums.RISK_SEVERITY),
        _a("detectedAt", "ts", required=True),
        _a("recorded", "bool"),
        _a("saNotifiedAt", "ts", optional=True),
        _a("delayJustification", "str", optional=True),
        _a("subjectsCommunicatedAt", "ts", optional=True),
        _a("controllersInformedAt", "ts", optional=True),
    ),
    "Data_Transfer": (_a("onward", "bool"),),
    "Certification": (
        _a("bodyAccredited", "bool"),
        _a("issuedAt", "ts", required=True),
        _a("processTransparent", "bool"),
        _a("voluntary", "bool"),
    ),
    "Infringement": (
        _a("kind", "str", required=True, enum=enums.INFRINGEMENT_TYPE),
        _a("imposedFineEUR", "int", optional=True, nonneg=True),
    ),
    "Turnover_Context": (
        _a("worldwideAnnualTurnoverEUR", "int", required=True, nonneg=True),
    ),
}
for _actor_cls in ACTOR_CLASSES:
    extra: tuple[AttrSpec, ...] = ()
    if _actor_cls == "Data_Processor":
        extra = (_a("instructions", "strlist"),)
    if _actor_cls == "Joint_Controllers":
        extra = (
            _a("arrangementTransparent", "bool"),
            _a("arrangementAvailableToSubjects", "bool"),
        )
    CLASS_ATTRS[_actor_cls] = _ACTOR_BASE_ATTRS + extra
del _actor_cls, extra

CLASS_REFS: dict[str, tuple[RefSpec, ...]] = {
    "Country": (),
    "Data_Subject": (_r("residence", frozenset({"Country"}), required=True),),
    "Child_Data_Subject": (_r("residence", frozenset({"Country"}), required=True),),
    "Responsible_Parent": (
        _r("documents", frozenset({"Document"}), many=True),
        _r("responsibleFor", SUBJECT_CLASSES, many=True),
    ),
    "Document": (),
    "Personal_Data": (_r("subjects", SUBJECT_CLASSES, many=True),),
    "Purpose": (),
    "Consent": (
        _r("givenBy", CONSENT_GIVER_CLASSES, required=True),
        _r("givenFor", frozenset({"Purpose"}), many=True),
    ),
    "Data_Processing": (
        _r("personalData", frozenset({"Personal_Data"}), many=True),
        _r("purposes", frozenset({"Purpose"}), many=True),
        _r("consent", frozenset({"Consent"})),
        _r("controllers", ACTOR_CLASSES, many=True),
        _r("processors", ACTOR_CLASSES, many=True),
        _r("recipients", ACTOR_CLASSES, many=True),
        _r("securityMeasures", MEASURE_CLASSES, many=True),
        _r("supportedRights", frozenset({"Right_Support"}), many=True),
        _r("records", frozenset({"Record_Activity"}), many=True),
        _r("dpia", frozenset({"Data_Protection_Impact_Assessment"})),
        _r("transfers", frozenset({"Data_Transfer"}), many=True),
    ),
    "Right_Support": (_r("requests", frozenset({"Right_Request"}), many=True),),
    "Right_Request": (),
    "Technical": (),
    "Organizational": (),
    "Record_Activity": (_r("holder", ACTOR_CLASSES, required=True),),
    "Data_Protection_Impact_Assessment": (),
    "Breach": (
        _r("processing", frozenset({"Data_Processing"}), required=True),
        _r("detectedBy", ACTOR_CLASSES, required=True),
    ),
    "Data_Transfer": (
        _r("from", frozenset({"Country"}), required=True, py="fromCountry"),
        _r("to", frozenset({"Country"}), required=True, py="toCountry"),
    ),
    "Certification": (
        _r("holder", ACTOR_CLASSES, required=True),
        _r("issuedBy", frozenset({"Certification_Body"}), required=True),
    ),
    "Infringement": (
        _r("by", ACTOR_CLASSES),
        _r("turnover", frozenset({"Turnover_Context"})),
    ),
    "Turnover_Context": (),
}
for _actor_cls in ACTOR_CLASSES:
    refs: tuple[RefSpec, ...] = (_r("countries", frozenset({"Country"}), many=True),)
    if _actor_cls == "Representative":
        refs += (_r("represents", ACTOR_CLASSES, many=True),)
    if _actor_cls == "Data_Protection_Officer":
        refs += (_r("designatedBy", ACTOR_CLASSES, many=True),)
    CLASS_REFS[_actor_cls] = refs
del _actor_cls, refs

GENERIC_CLASSES = frozenset(
    name for name in TRACEABILITY
    if name not in TYPED_CLASSES and name not in ABSTRACT_CLASSES
)


# ---------------------------------------------------------------------------
# Graph container
# ---------------------------------------------------------------------------

class InstanceGraph:
    """Reference-resolved, id-sorted set of model objects. Immutable."""

    __slots__ = ("_objects", "_by_class")

    def __init__(self, objects: Sequence[Node]):
        ordered = sorted(objects, key=lambda n: n.id)
        if any(not n.id for n in ordered):
            raise ValueError("object ids must be non-empty")
        self._objects: dict[str, Node] = {n.id: n for n in ordered}
        if len(self._objects) != len(ordered):
            raise ValueError("duplicate object ids in graph")
        by_class: dict[str, list[str]] = {}
        for node in ordered:
            by_class.setdefault(node.cls, []).append(node.id)
        self._by_class = {cls: tuple(ids) for cls, ids in by_class.items()}

    def __len__(self) -> int:
        return len(self._objects)

    def __contains__(self, object_id: str) -> bool:
        return object_id in self._objects

    def __iter__(self) -> Iterator[Node]:
        return iter(self._objects.values())

    def get(self, object_id: str) -> Node | None:
        return self._objects.get(object_id)

    def __getitem__(self, object_id: str) -> Node:
        return self._objects[object_id]

    def of_class(self, class_name: str) -> list[Node]:
        """Objects of ``class_name``, including model subclasses."""
        names = _EXPANSIONS.get(class_name, (class_name,))
        out: list[Node] = []
        for name in names:
            out.extend(self._objects[i] for i in self._by_class.get(name, ()))
        out.sort(key=lambda n: n.id)
        return out

    def resolve(self, ids: Sequence[str]) -> list[Node]:
        return [self._objects[i] for i in ids if i in self._objects]

    def processings(self) -> list[DataProcessing]:
        return [n for n in self.of_class("Data_Processing")
                if isinstance(n, DataProcessing)]

    def latest_minutes(self) -> int:
        """Latest timestamp in the graph, in minutes; 0 for a dateless graph."""
        latest = 0
        for node in self:
            for raw in _timestamps_of(node):
                try:
                    latest = max(latest, parse_minutes(raw))
                except TimestampError:
                    continue
        return latest


_EXPANSIONS: dict[str, tuple[str, ...]] = {
    "Data_Subject": tuple(sorted(SUBJECT_CLASSES)),
    "Actor": tuple(sorted(ACTOR_CLASSES)),
    "Security_Measure": tuple(sorted(MEASURE_CLASSES)),
}


def _timestamps_of(node: Node) -> list[str]:
    out: list[str] = []
    for spec in CLASS_ATTRS.get(node.cls, ()):
        if spec.kind == "ts":
            value = getattr(node, spec.name, None)
            if isinstance(value, str) and value:
                out.append(value)
    if isinstance(node, DPIA) and node.consultation is not None:
        out.append(node.consultation.requestedAt)
        if node.consultation.adviceAt:
            out.append(node.consultation.adviceAt)
    return out


# ---------------------------------------------------------------------------
# Structural validation
# ---------------------------------------------------------------------------

DANGLING_REF = "DANGLING_REF"
BAD_LITERAL = "BAD_LITERAL"
INVARIANT = "INVARIANT"


@dataclass(frozen=True)
class Violation:
    code: str
    objectId: str
    message: str


def _actor_is(graph: InstanceGraph, actor_id: str, classes: frozenset[str]) -> bool:
    node = graph.get(actor_id)
    return node is not None and node.cls in classes


def validate_graph(
    graph: InstanceGraph,
    profile=None,
) -> list[Violation]:
    """Integrity violations of the graph: dangling references, enumeration
    literals outside the (possibly profile-extended) sets, and class
    invariant breaches. Deterministic and declaration-order independent.
    """
    extensions = profile.enumExtensions if profile is not None else None
    out: list[Violation] = []
    add = out.append

    for node in graph:
        # References resolve to an allowed class.
        if isinstance(node, GenericNode):
            for role, ids in sorted(node.refs.items()):
                for target in ids:
                    if target not in graph:
                        add(Violation(DANGLING_REF, node.id,
                                      f"reference {role!r} to missing object {target!r}"))
        else:
            for spec in CLASS_REFS.get(node.cls, ()):
                value = getattr(node, spec.field_name)
                ids = value if spec.many else ((value,) if value else ())
                for target in ids:
                    got = graph.get(target)
                    if got is None:
                        add(Violation(DANGLING_REF, node.id,
                                      f"reference {spec.name!r} to missing object {target!r}"))
                    elif spec.targets is not None and got.cls not in spec.targets:
                        add(Violation(DANGLING_REF, node.id,
                                      f"reference {spec.name!r} resolves to {got.cls}, "
                                      f"expected one of {sorted(spec.targets)}"))

        # Enumeration membership.
        for spec in CLASS_ATTRS.get(node.cls, ()):
            if spec.enum is None:
                continue
            value = getattr(node, spec.name, None)
            values = value if spec.many else ((value,) if value is not None else ())
            for bad in enums.bad_literals(spec.enum, values, extensions):
                add(Violation(BAD_LITERAL, node.id,
                              f"{spec.name}: {bad!r} is not a literal of {spec.enum}"))

        # Class invariants.
        out.extend(_node_invariants(graph, node, profile))

    out.sort(key=lambda v: (v.objectId, v.code, v.message))
    return out


def _node_invariants(graph: InstanceGraph, node: Node, profile) -> list[Violation]:
    bad: list[Violation] = []
    add = bad.append

    if isinstance(node, Country):
        if node.isEUMemberState and not node.EULawApplies:
            add(Violation(INVARIANT, node.id,
                          "an EU member state is subject to EU law"))
        if not (len(node.code) == 2 and node.code.isalpha() and node.code.isupper()):
            add(Violation(INVARIANT, node.id,
                          f"country code {node.code!r} is not a two-letter ISO code"))
    elif isinstance(node, Actor):
        if node.cls in ("Data_Controller", "Data_Processor") and not node.countries:
            add(Violation(INVARIANT, node.id,
                          f"{node.cls} must name at least one country"))
    elif isinstance(node, DataSubject):
        if node.cls == "Child_Data_Subject":
            limit = DEFAULT_CHILD_AGE_LIMIT
            if profile is not None:
                limit = profile.minimum_age(graph, node, None)
            if node.ageYears >= limit:
                add(Violation(INVARIANT, node.id,
                              f"child subject aged {node.ageYears} meets the "
                              f"consent age limit of {limit}"))
    elif isinstance(node, PersonalData):
        if node.identifiesSubject and not node.subjects:
            add(Violation(INVARIANT, node.id,
                          "identifying data must reference its subjects"))
    elif isinstance(node, Purpose):
        if node.legalBasis == "LEGAL_OBLIGATION" and not node.obligationSource:
            add(Violation(INVARIANT, node.id,
                          "a legal-obligation basis requires the obligation source"))
    elif isinstance(node, Consent):
        if not node.givenFor:
            add(Violation(INVARIANT, node.id,
                          "consent must cover at least one purpose"))
    elif isinstance(node, DataProcessing):
        if not node.purposes:
            add(Violation(INVARIANT, node.id,
                          "processing must declare at least one purpose"))
    elif isinstance(node, RightRequest):
        if node.respondedAt is not None and node.receivedAt:
            try:
                if parse_minutes(node.respondedAt) < parse_minutes(node.receivedAt):
                    add(Violation(INVARIANT, node.id,
                                  "response precedes the request"))
            except TimestampError:
                pass
        if node.denialReason is not None and node.denialReason not in enums.DENIAL_REASONS:
            add(Violation(BAD_LITERAL, node.id,
                          f"denialReason: {node.denialReason!r} is not a known "
                          "denial or restriction reason"))
    elif isinstance(node, Breach):
        try:
            detected = parse_minutes(node.detectedAt)
        except TimestampError:
            detected = None
        if detected is not None:
            for label in ("saNotifiedAt", "subjectsCommunicatedAt", "controllersInformedAt"):
                raw = getattr(node, label)
                if raw is None:
                    continue
                try:
                    if parse_minutes(raw) < detected:
                        add(Violation(INVARIANT, node.id,
                                      f"{label} precedes detection"))
                except TimestampError:
                    pass
    elif isinstance(node, DataTransfer):
        bad.extend(_basis_invariants(node))
    elif isinstance(node, TurnoverContext):
        if node.worldwideAnnualTurnoverEUR < 0:
            add(Violation(INVARIANT, node.id, "turnover must be non-negative"))
    elif isinstance(node, GenericNode):
        pass  # class membership is checked at load; attrs are open

    return bad


# Basis fields that may be populated per basis kind.
_BASIS_FIELDS: dict[str, frozenset[str]] = {
    "IntraEU": frozenset(),
    "AdequacyDecision": frozenset({"additionalRequirements", "evidence"}),
    "BCR": frozenset({"information", "approved", "legallyBinding"}),
    "StandardContractualClauses": frozenset({"approved"}),
    "AdministrativeArrangement": frozenset({"authorized"}),
    "CodeOfConductOrCertification": frozenset(),
    "PublicBodyInstrument": frozenset({"authorized"}),
    "Derogation": frozenset({"derogation", "details"}),
}

_BASIS_DEFAULTS = TransferBasis("IntraEU")


def _basis_invariants(node: DataTransfer) -> list[Violation]:
    basis = node.basis
    bad: list[Violation] = []
    if basis.kind not in _BASIS_FIELDS:
        bad.append(Violation(BAD_LITERAL, node.id,
                             f"basis kind {basis.kind!r} is not a transfer basis"))
        return bad
    allowed = _BASIS_FIELDS[basis.kind]
    for f in fields(TransferBasis):
        if f.name == "kind" or f.name in allowed:
            continue
        if getattr(basis, f.name) != getattr(_BASIS_DEFAULTS, f.name):
            bad.append(Violation(INVARIANT, node.id,
                                 f"basis field {f.name!r} does not belong to "
                                 f"a {basis.kind} basis"))
    if basis.kind == "Derogation":
        if basis.derogation is None:
            bad.append(Violation(INVARIANT, node.id,
                                 "a derogation basis must name its derogation"))
        elif basis.derogation not in enums.ENUMERATIONS[enums.TRANSFER_DEROGATION_TYPES]:
            bad.append(Violation(BAD_LITERAL, node.id,
                                 f"derogation {basis.derogation!r} is not a "
                                 "transfer derogation"))
    for literal in basis.information:
        if literal not in enums.ENUMERATIONS[enums.TRANSFER_CONTRACT_INFORMATION]:
            bad.append(Violation(BAD_LITERAL, node.id,
                                 f"basis information {literal!r} is not a "
                                 "transfer contract information item"))
    return bad
