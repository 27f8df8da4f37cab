"""Community detection on social graphs with text-derived edge weights.

Two attribute signals are computed per user pair from the users' posted
text: content similarity (cosine of tf-idf vectors) and sentiment bias
(combined polar sentiment vectors).  Their average weights the structural
edges of the interaction graph, and communities are detected by seeded
expansion from high-strength centers, scored with weighted modularity.
"""

from .corpus import (
    Corpus,
    Document,
    EdgeList,
    TokenizerConfig,
    build_corpus,
    ensure_users,
    load_corpus,
    load_edges,
    tokenize,
)
from .detect import Partition, detect, expand_communities, select_centers
from .errors import GraphError, ParameterError, ParseError, UndefinedModularityError
from .fixtures import SyntheticSpec, default_spec, generate, karate_edge_list, karate_partition
from .graph import WeightedGraph, build_weighted_graph, structural_graph
from .metrics import QualityReport, modularity, nmi, quality_report
from .pipeline import CompareResult, RunConfig, RunResult, StageError, compare, run
from .sentiment import (
    CompositeSentiment,
    SentimentLexicon,
    SentimentVector,
    bias_matrix,
    bias_value,
    compose,
    load_lexicon,
    score_text,
)
from .similarity import (
    SymmetricMatrix,
    cosine_similarity,
    inverse_document_frequency,
    similarity_matrix,
    term_frequency,
    tfidf_vector,
    user_vectors,
)

__version__ = "0.1.0"
