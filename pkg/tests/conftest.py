import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

import pytest
from hypothesis import settings

settings.register_profile("suite", max_examples=120, deadline=None)
settings.load_profile("suite")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def golden_layout():
    from srlkit.pipeline import CorpusLayout

    return CorpusLayout(
        prop_root=FIXTURES / "corpus" / "prop",
        onf_root=FIXTURES / "corpus" / "onf",
        parse_root=FIXTURES / "corpus" / "parse",
    )


@pytest.fixture(scope="session")
def golden_srl_csv() -> Path:
    return FIXTURES / "golden" / "dataset_srl.csv"


@pytest.fixture(scope="session")
def golden_orl_csv() -> Path:
    return FIXTURES / "golden" / "dataset_orl.csv"


@pytest.fixture(scope="session")
def golden_records(golden_layout):
    from srlkit.pipeline import extract_corpus

    return extract_corpus(golden_layout).records


@pytest.fixture(scope="session")
def corpus_trees(golden_layout):
    """Every parsed tree of the bundled fixture corpus, keyed by file id."""
    from srlkit import treebank
    from srlkit.onf import parse_trees_file
    from srlkit.pipeline import discover_files

    triples, _ = discover_files(golden_layout)
    out = {}
    for triple in triples:
        texts = parse_trees_file(triple.parse_path.read_text(encoding="utf-8"))
        out[triple.file_id] = [treebank.parse_tree(t) for t in texts]
    return out
