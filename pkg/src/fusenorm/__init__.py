"""fusenorm: WFST text normalization with language-model rescoring.

A non-deterministic weighted transducer proposes every grammatical
verbalization of a sentence, cheap pruning keeps the fully normalized ones,
and a language model picks the best by context.  The grammar guarantees the
output vocabulary, so the model can pick a wrong reading but never invent or
drop content.
"""

from .candidates import Candidate, PruneConfig, build_lattice, det_normalize, detokenize, generate
from .errors import (
    CyclicMachineError,
    DataFormatError,
    FusenormError,
    NoPathError,
    ScorerError,
)
from .evaluation import EvalReport, ParallelExample, canonicalize, evaluate, load_google_tn
from .grammars import GrammarSet, Reading, SemioticClass, TokenSpan, readings, tag
from .normalizer import TextNormalizer
from .scoring import (
    NgramModel,
    RemoteScorer,
    Score,
    ScoreRequest,
    mlm_aggregate,
    mlm_score_variant,
    select_best,
    train_ngram,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "CyclicMachineError",
    "DataFormatError",
    "EvalReport",
    "FusenormError",
    "GrammarSet",
    "NgramModel",
    "NoPathError",
    "ParallelExample",
    "PruneConfig",
    "Reading",
    "RemoteScorer",
    "Score",
    "ScoreRequest",
    "ScorerError",
    "SemioticClass",
    "TextNormalizer",
    "TokenSpan",
    "build_lattice",
    "canonicalize",
    "det_normalize",
    "detokenize",
    "evaluate",
    "generate",
    "load_google_tn",
    "mlm_aggregate",
    "mlm_score_variant",
    "readings",
    "select_best",
    "tag",
    "train_ngram",
]
