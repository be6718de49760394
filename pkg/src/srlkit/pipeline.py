"""End-to-end extraction: corpus discovery, span resolution, record
building and filtering, ORL mapping, and CSV export.

A corpus is three parallel directory trees of `.prop`, `.onf`, and
`.parse` files laid out as `<root>/<NN>/<stem>.<ext>` with NN in the
configured folder range. A file id is `<NN>/<stem>`. Discovery is driven
by the `.prop` files; ids missing either companion file are skipped and
logged. Output rows are totally ordered by (file id, tree index,
predicate terminal, source line), so runs are byte-reproducible at any
parallelism.
"""

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from srlkit import treebank
from srlkit.cleaning import TraceMode, TracePolicy, strip_traces
from srlkit.errors import (
    AlignmentError,
    EmptyCorpus,
    ExtractionError,
    MissingRoot,
    SrlKitError,
)
from srlkit.onf import SentencePair, parse_onf, parse_trees_file
from srlkit.propbank import (
    PointerExpr,
    Proposition,
    RoleLabel,
    parse_prop_file,
    sort_propositions,
)

__all__ = [
    "CorpusLayout",
    "FileTriple",
    "Provenance",
    "SrlRecord",
    "OrlRecord",
    "RunSummary",
    "ExtractResult",
    "SRL_HEADER",
    "ORL_HEADER",
    "discover_files",
    "resolve_role",
    "build_records",
    "filter_records",
    "map_to_orl",
    "export_csv",
    "extract_corpus",
]

SRL_HEADER = ["sentence", "treebanked_sentence", "predicate", "arg0", "arg1", "merged_arguments"]
ORL_HEADER = ["sentence", "treebanked_sentence", "holder", "expression", "target"]


@dataclass(frozen=True)
class CorpusLayout:
    prop_root: Path
    onf_root: Path
    parse_root: Path
    folder_range: tuple[int, int] = (0, 24)
    exclusions: frozenset[str] = frozenset()


@dataclass(frozen=True)
class FileTriple:
    file_id: str
    prop_path: Path
    onf_path: Path
    parse_path: Path


@dataclass(frozen=True)
class Provenance:
    file_id: str
    tree_index: int
    predicate_terminal: int


@dataclass(frozen=True)
class SrlRecord:
    sentence: str
    treebanked_sentence: str
    predicate: str
    arg0: str
    arg1: str
    merged_arguments: str
    provenance: Provenance | None = None


@dataclass(frozen=True)
class OrlRecord:
    sentence: str
    treebanked_sentence: str
    holder: str
    expression: str
    target: str
    provenance: Provenance | None = None


@dataclass
class RunSummary:
    files_discovered: int = 0
    files_processed: int = 0
    files_skipped: int = 0
    propositions: int = 0
    propositions_failed: int = 0
    rows_filtered: int = 0
    rows_emitted: int = 0
    skip_log: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class ExtractResult:
    records: list[SrlRecord]
    summary: RunSummary


def discover_files(layout: CorpusLayout) -> tuple[list[FileTriple], list[tuple[str, str]]]:
    """Aligned (prop, onf, parse) triples plus skip entries, ordered by id."""
    for root in (layout.prop_root, layout.onf_root, layout.parse_root):
        if not Path(root).is_dir():
            raise MissingRoot(f"corpus root does not exist: {root}")
    lo, hi = layout.folder_range
    triples: list[FileTriple] = []
    skips: list[tuple[str, str]] = []
    for num in range(lo, hi + 1):
        folder = f"{num:02d}"
        prop_dir = Path(layout.prop_root) / folder
        if not prop_dir.is_dir():
            continue
        for prop_path in sorted(prop_dir.glob("*.prop")):
            file_id = f"{folder}/{prop_path.stem}"
            if file_id in layout.exclusions:
                skips.append((file_id, "excluded by configuration"))
                continue
            onf_path = Path(layout.onf_root) / folder / f"{prop_path.stem}.onf"
            parse_path = Path(layout.parse_root) / folder / f"{prop_path.stem}.parse"
            missing = [p.suffix for p in (onf_path, parse_path) if not p.is_file()]
            if missing:
                skips.append((file_id, f"missing companion file(s): {' '.join(missing)}"))
                continue
            triples.append(FileTriple(file_id, prop_path, onf_path, parse_path))
    if not triples:
        raise EmptyCorpus("no complete (.prop, .onf, .parse) triples found")
    return triples, skips


def resolve_role(expr_list: list[PointerExpr], tree, policy: TracePolicy | None = None) -> str:
    """Resolve pointer expressions to cleaned surface text.

    Each pointer selects a subtree whose cleaned text becomes one part;
    parts that clean to "" are dropped and the survivors joined with
    single spaces, expressions in source order.
    """
    pieces = []
    for expr in expr_list:
        for pointer in expr.parts:
            node = treebank.select(tree, pointer.terminal, pointer.height)
            text = strip_traces(treebank.leaves(node), policy, tree=node)
            if text:
                pieces.append(text)
    return " ".join(pieces)


def _build_record(
    prop: Proposition,
    trees: list,
    sentences: list[SentencePair],
    file_id: str,
    policy: TracePolicy | None,
) -> SrlRecord:
    if prop.tree_index >= len(trees):
        raise AlignmentError(
            f"tree index {prop.tree_index} out of range ({len(trees)} trees)"
        )
    tree = trees[prop.tree_index]
    pair = sentences[prop.tree_index]
    predicate = resolve_role(prop.exprs(RoleLabel.REL), tree, policy)
    arg0 = resolve_role(prop.exprs(RoleLabel.ARG0), tree, policy).replace("|", "/")
    arg1 = resolve_role(prop.exprs(RoleLabel.ARG1), tree, policy).replace("|", "/")
    return SrlRecord(
        sentence=pair.plain,
        treebanked_sentence=pair.treebanked,
        predicate=predicate,
        arg0=arg0,
        arg1=arg1,
        merged_arguments=f"{arg0}|{arg1}",
        provenance=Provenance(file_id, prop.tree_index, prop.predicate_terminal),
    )


def build_records(
    props: list[Proposition],
    trees: list,
    sentences: list[SentencePair],
    file_id: str = "",
    policy: TracePolicy | None = None,
) -> list[SrlRecord]:
    """One record per proposition; raises on the first bad proposition."""
    if len(trees) != len(sentences):
        raise AlignmentError(
            f"{len(sentences)} sentences but {len(trees)} trees"
        )
    return [_build_record(p, trees, sentences, file_id, policy) for p in props]


def filter_records(records: list[SrlRecord]) -> list[SrlRecord]:
    """Drop rows lacking both core arguments (merged_arguments == '|')."""
    return [r for r in records if r.merged_arguments != "|"]


def map_to_orl(record: SrlRecord) -> OrlRecord:
    """ARG0 -> Holder, REL -> Expression, ARG1 -> Target; values copied."""
    return OrlRecord(
        sentence=record.sentence,
        treebanked_sentence=record.treebanked_sentence,
        holder=record.arg0,
        expression=record.predicate,
        target=record.arg1,
        provenance=record.provenance,
    )


def export_csv(records: list[SrlRecord], path, schema: str = "srl") -> None:
    """Write records as UTF-8 CSV with a header row and standard quoting."""
    if schema not in ("srl", "orl"):
        raise ValueError(f"unknown schema {schema!r}")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        if schema == "srl":
            writer.writerow(SRL_HEADER)
            for r in records:
                writer.writerow(
                    [r.sentence, r.treebanked_sentence, r.predicate, r.arg0, r.arg1, r.merged_arguments]
                )
        else:
            writer.writerow(ORL_HEADER)
            for r in records:
                o = map_to_orl(r)
                writer.writerow(
                    [o.sentence, o.treebanked_sentence, o.holder, o.expression, o.target]
                )


@dataclass
class _FileOutcome:
    file_id: str
    records: list[SrlRecord] = field(default_factory=list)
    propositions: int = 0
    failed: int = 0
    skips: list[tuple[str, str]] = field(default_factory=list)
    file_skipped: bool = False


def _process_file(triple: FileTriple, policy: TracePolicy, strict: bool) -> _FileOutcome:
    out = _FileOutcome(file_id=triple.file_id)
    try:
        props = parse_prop_file(triple.prop_path.read_text(encoding="utf-8"))
        sentences = parse_onf(triple.onf_path.read_text(encoding="utf-8"))
        tree_texts = parse_trees_file(triple.parse_path.read_text(encoding="utf-8"))
        trees = [treebank.parse_tree(t) for t in tree_texts]
        if len(trees) != len(sentences):
            raise AlignmentError(f"{len(sentences)} sentences but {len(trees)} trees")
    except SrlKitError as exc:
        if strict:
            raise ExtractionError(f"{triple.file_id}: {exc}") from exc
        out.skips.append((triple.file_id, str(exc)))
        out.file_skipped = True
        return out
    out.propositions = len(props)
    for prop in sort_propositions(props):
        try:
            record = _build_record(prop, trees, sentences, triple.file_id, policy)
        except SrlKitError as exc:
            if strict:
                raise ExtractionError(
                    f"{triple.file_id} prop line {prop.line_no}: {exc}"
                ) from exc
            out.skips.append((triple.file_id, f"prop line {prop.line_no}: {exc}"))
            out.failed += 1
            continue
        out.records.append(record)
    return out


def extract_corpus(
    layout: CorpusLayout,
    trace_mode: TraceMode = TraceMode.TREE_GUIDED,
    strict: bool = False,
    jobs: int = 1,
) -> ExtractResult:
    """Run discover -> parse -> resolve -> filter over a corpus."""
    triples, discovery_skips = discover_files(layout)
    policy = TracePolicy(mode=trace_mode)
    summary = RunSummary(
        files_discovered=len(triples) + len(discovery_skips),
        skip_log=list(discovery_skips),
    )
    summary.files_skipped = len(discovery_skips)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda t: _process_file(t, policy, strict), triples))
    else:
        outcomes = [_process_file(t, policy, strict) for t in triples]
    records: list[SrlRecord] = []
    for outcome in outcomes:  # already in file-id order
        summary.skip_log.extend(outcome.skips)
        if outcome.file_skipped:
            summary.files_skipped += 1
            continue
        summary.files_processed += 1
        summary.propositions += outcome.propositions
        summary.propositions_failed += outcome.failed
        records.extend(outcome.records)
    kept = filter_records(records)
    summary.rows_filtered = len(records) - len(kept)
    summary.rows_emitted = len(kept)
    return ExtractResult(records=kept, summary=summary)
