"""Proof checking, search and translation for the sequent calculi FL and FL'."""

from ._core import (
    CheckReport,
    CorpusError,
    CurryStrategy,
    Formula,
    ProofTree,
    SearchOutcome,
    SearchStatus,
    Sequent,
    SourceError,
    System,
    TranslationError,
    TranslationTrace,
    UnknownRule,
    check_proof,
    curry_context,
    decide_cut_free,
    embed_to_fl,
    parse_formula,
    parse_proof,
    parse_sequent,
    premise_candidates,
    run_corpus,
    search_with_cuts,
    translate_to_flprime,
)

__all__ = [name for name in dir() if not name.startswith("_")]
