# -*- encoding: utf-8 -*-
"""Text corpus preparation for sequence memory experiments.

Raw text is split into sentences on terminal punctuation, tokens are
lowercased, stripped of punctuation, and dropped when they are not alphabetic
or are stop words. Sentences with an acceptable filtered length are sampled
with a seeded generator, then mapped to symbol ids through a Vocabulary.
Repeated words inside one sentence become virtual objects ("word#2", ...)
so each stored sequence keeps distinct elements.
"""

from __future__ import annotations

import json
import logging
import os
import re
import string
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from bs4 import BeautifulSoup

from ssakg.memory.exceptions import CorpusTooSmall, InvalidParams, SnapshotError
from ssakg.utils import make_rng

_LOGGER = logging.getLogger(__name__)

SENTENCE_END = re.compile(r"[.!?]+")
HTML_SUFFIXES = (".html", ".htm", ".xhtml")
VIRTUAL_SEPARATOR = "#"


class Vocabulary(object):
    """Bijective token <-> SymbolId map with dense ids in first-occurrence order."""

    def __init__(self, tokens: Iterable[str] = ()):
        self._ids: Dict[str, int] = {}
        self._tokens: List[str] = []
        for token in tokens:
            self.add(token)

    def __len__(self):
        return len(self._tokens)

    def __contains__(self, token):
        return token in self._ids

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self._tokens == other._tokens

    @property
    def size(self):
        return len(self._tokens)

    @property
    def tokens(self):
        return list(self._tokens)

    def add(self, token: str) -> int:
        if token not in self._ids:
            self._ids[token] = len(self._tokens)
            self._tokens.append(token)
        return self._ids[token]

    def id_of(self, token: str) -> int:
        return self._ids[token]

    def token_of(self, symbol: int) -> str:
        return self._tokens[symbol]

    def decode(self, sequence: Iterable[int]) -> List[str]:
        return [self._tokens[s] for s in sequence]


@dataclass(frozen=True)
class CorpusSpec:
    corpus_path: str
    stopword_path: Optional[str]
    min_len: int
    max_len: int
    count: int
    seed: int = 0

    def __post_init__(self):
        if not 2 <= self.min_len <= self.max_len:
            raise InvalidParams(
                "Need 2 <= min_len <= max_len, got %d, %d." % (self.min_len, self.max_len)
            )
        if self.count < 1:
            raise InvalidParams("Sentence count must be at least 1, got %d." % self.count)


def load_stopwords(path) -> frozenset:
    """One lowercase word per line; blank lines and '#' comments are ignored."""
    if path is None:
        return frozenset()
    with open(path, "r", encoding="UTF-8") as handle:
        words = frozenset(
            line.strip().lower()
            for line in handle
            if line.strip() and not line.lstrip().startswith("#")
        )
    if not words:
        _LOGGER.warning("Stop-word file %s is empty, only punctuation and case are normalised", path)
    return words


def read_corpus(path) -> str:
    with open(path, "r", encoding="UTF-8") as handle:
        text = handle.read()
    if os.path.splitext(path)[1].lower() in HTML_SUFFIXES:
        text = BeautifulSoup(text, "html.parser").get_text(" ")
    return text


def split_sentences(text: str) -> List[str]:
    return [chunk for chunk in SENTENCE_END.split(text) if chunk.strip()]


def lowercase_filter(tokens):
    return [token.lower() for token in tokens]


def punctuation_filter(tokens):
    return [token.strip(string.punctuation) for token in tokens]


def alphabetic_filter(tokens):
    return [token for token in tokens if token.isalpha()]


def stopword_filter(tokens, stopwords):
    return [token for token in tokens if token not in stopwords]


def tokenize_sentence(sentence: str, stopwords=frozenset()) -> List[str]:
    tokens = sentence.split()
    tokens = lowercase_filter(tokens)
    tokens = punctuation_filter(tokens)
    tokens = alphabetic_filter(tokens)
    return stopword_filter(tokens, stopwords)


def prepare_corpus(spec: CorpusSpec) -> Tuple[List[List[str]], Vocabulary]:
    stopwords = load_stopwords(spec.stopword_path)
    sentences = [tokenize_sentence(s, stopwords) for s in split_sentences(read_corpus(spec.corpus_path))]
    survivors = [tokens for tokens in sentences if spec.min_len <= len(tokens) <= spec.max_len]
    _LOGGER.info(
        "%d of %d sentences have %d-%d words after filtering",
        len(survivors), len(sentences), spec.min_len, spec.max_len,
    )
    if len(survivors) < spec.count:
        raise CorpusTooSmall(
            "Only %d sentences with %d-%d words, %d requested."
            % (len(survivors), spec.min_len, spec.max_len, spec.count)
        )

    rng = make_rng(spec.seed)
    picked = sorted(int(i) for i in rng.choice(len(survivors), size=spec.count, replace=False))
    selected = [survivors[i] for i in picked]

    vocabulary = Vocabulary(token for tokens in selected for token in tokens)
    return selected, vocabulary


def encode_virtual(tokens: List[str], vocab: Vocabulary) -> List[int]:
    """Map tokens to ids; the k-th repeat of t (k >= 2) becomes the virtual token "t#k"."""
    occurrences = Counter()
    sequence = []
    for token in tokens:
        occurrences[token] += 1
        k = occurrences[token]
        name = token if k == 1 else "%s%s%d" % (token, VIRTUAL_SEPARATOR, k)
        sequence.append(vocab.add(name))
    return sequence


def word_frequencies(sentences: Iterable[List[str]]) -> List[Tuple[str, int]]:
    """Token frequency table, most frequent first, ties by token."""
    counts = Counter(token for tokens in sentences for token in tokens)
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def save_prepared(path, sentences: List[List[int]], vocab: Vocabulary):
    with open(path, "w", encoding="UTF-8") as handle:
        json.dump({"vocab": vocab.tokens, "sentences": sentences}, handle, ensure_ascii=False)


def load_prepared(path) -> Tuple[List[List[int]], Vocabulary]:
    with open(path, "r", encoding="UTF-8") as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SnapshotError("Prepared file %s is not valid JSON: %s" % (path, exc))
    if not isinstance(document, dict) or "vocab" not in document or "sentences" not in document:
        raise SnapshotError("Prepared file %s must hold 'vocab' and 'sentences'." % path)
    return document["sentences"], Vocabulary(document["vocab"])
