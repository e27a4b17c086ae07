"""Python bindings for the framelens toolkit."""

from ._framelens import (
    Error,
    bleu,
    chunk_words,
    class_metrics,
    classify_hybrid,
    cluster_article_scores,
    compound_score,
    corpus_stats,
    detect_victims,
    hybrid_decision,
    lexicon_categories,
    map_five_to_three,
    map_probabilities,
    match_lexicon,
    normalized_tokens,
    rouge_l,
    run_cli,
    segment_sentences,
    trailing_mean,
)

__all__ = [
    "Error",
    "bleu",
    "chunk_words",
    "class_metrics",
    "classify_hybrid",
    "cluster_article_scores",
    "compound_score",
    "corpus_stats",
    "detect_victims",
    "hybrid_decision",
    "lexicon_categories",
    "map_five_to_three",
    "map_probabilities",
    "match_lexicon",
    "normalized_tokens",
    "rouge_l",
    "run_cli",
    "segment_sentences",
    "trailing_mean",
]
