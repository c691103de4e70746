"""Built-in verification corpus."""

from .cases import CorpusCase, corpus_case, corpus_cases, select_cases

__all__ = ["CorpusCase", "corpus_case", "corpus_cases", "select_cases"]
