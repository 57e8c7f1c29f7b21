import pytest

import bridgeref as br
from bridgeref.data import DEMO_CORPUS, LEXICON_DIR


@pytest.fixture(scope="session")
def corpora():
    documents = br.parse_corpus(DEMO_CORPUS.read_text(encoding="utf-8"))
    return {d.doc_id: d for d in documents}


@pytest.fixture(scope="session")
def lexicons():
    return br.load_lexicons(LEXICON_DIR)


@pytest.fixture(scope="session")
def config():
    return br.ResolverConfig.default()
