"""Subword basis induction and pronunciation lexicon composition for
proper-name corpora."""

from .corpus import Corpus, CorpusError, NameRecord, frequency_rank, load_names, normalize
from .engine import (
    IterationStats,
    RunConfig,
    check_convergence,
    global_cost,
    grid_search_weights,
    run_alg1,
    run_alg2,
    seed_basis,
    segment_corpus,
    trivial_case_a,
    trivial_case_b,
)
from .features import (
    ALG1_DEFAULT_WEIGHTS,
    ALG2_DEFAULT_WEIGHTS,
    FeatureVector,
    WeightSet,
    compute_features,
    cost_alg1,
    cost_alg2,
    demand_shares,
    select_best,
)
from .lexicon import (
    Lexicon,
    LexiconError,
    TranscriptionEntry,
    TranscriptionTable,
    build_lexicon,
    compose,
    emit_lexicon,
    load_transcriptions,
)
from .ortho import (
    Basis,
    BasisWord,
    count_constructions,
    first_construction,
    is_constructible,
    is_ortho,
    make_ortho,
)
from .segmenter import (
    Segment,
    SegmentKind,
    SequenceCandidate,
    SubstringIndex,
    candidate_words,
    enumerate_all,
    enumerate_with_basis,
)
from .syntax import CharClassTable, accepts_syntax

__version__ = "0.1.0"
