"""Word lists that drive tagging and detection.

The seed lists ship under ``data/lexicon``; a user directory with files of the
same names extends them (entries are unioned, never removed).
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path

ENV_LEXICON_DIR = "NLTEST_LEXICON_DIR"

PHRASE_FILES = (
    "action_verbs",
    "verification_cues",
    "precondition_cues",
    "connectors",
    "ambiguity_terms",
    "negators",
)

# Earlier files win when a word appears in several closed-class lists.
CLOSED_CLASS_FILES = (
    ("conjunctions", "CONJ", "CC"),
    ("determiners", "DET", "DT"),
    ("possessives", "PRON", "PRP$"),
    ("pronouns", "PRON", "PRP"),
    ("prepositions", "ADP", "IN"),
    ("numerals", "NUM", "CD"),
    ("modals", "VERB", "MD"),
    ("auxiliaries", "VERB", "VBZ"),
    ("adverbs", "ADV", "RB"),
    ("non_manner_adverbs", "ADV", "RB"),
    ("adjectives", "ADJ", "JJ"),
)


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class Lexicon:
    action_verbs: frozenset[str]
    verification_cues: frozenset[str]
    precondition_cues: frozenset[str]
    connectors: frozenset[str]
    ambiguity_terms: frozenset[str]
    negators: frozenset[str]
    closed_class: tuple[tuple[str, str, str], ...]  # (word, pos, tag)

    def __post_init__(self):
        for name in PHRASE_FILES:
            bad = [w for w in getattr(self, name) if w != w.lower() or not w.strip()]
            if bad:
                raise LexiconError(f"{name}: entries must be lower-cased and non-empty: {bad}")
        overlap = self.action_verbs & {c for c in self.verification_cues if " " not in c}
        if overlap:
            raise LexiconError(
                f"action_verbs and verification_cues overlap: {sorted(overlap)}"
            )

    @cached_property
    def closed_tags(self) -> dict[str, tuple[str, str]]:
        tags: dict[str, tuple[str, str]] = {}
        for word, pos, tag in self.closed_class:
            tags.setdefault(word, (pos, tag))
        return tags

    @cached_property
    def cue_verbs(self) -> frozenset[str]:
        """Leading words of cue phrases that act as bare verbs ("verify", "ensure")."""
        heads = {c.split()[0] for c in self.verification_cues | self.precondition_cues}
        return frozenset(
            h for h in heads
            if h not in self.closed_tags and not h.endswith("s") and not h.endswith("ed")
        )

    @cached_property
    def finite_cues(self) -> frozenset[str]:
        heads = {c.split()[0] for c in self.verification_cues if " " not in c}
        return frozenset(h for h in heads if h.endswith("s") or h.endswith("ed"))

    @cached_property
    def connector_sequences(self) -> tuple[tuple[str, ...], ...]:
        return _longest_first(self.connectors)

    @cached_property
    def ambiguity_sequences(self) -> tuple[tuple[str, ...], ...]:
        return _longest_first(self.ambiguity_terms)

    @cached_property
    def verification_sequences(self) -> tuple[tuple[str, ...], ...]:
        return _longest_first(self.verification_cues)

    @cached_property
    def precondition_sequences(self) -> tuple[tuple[str, ...], ...]:
        return _longest_first(self.precondition_cues)


def _longest_first(phrases) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted((tuple(p.split()) for p in phrases), key=lambda s: (-len(s), s)))


def read_entries(path: Path) -> list[str]:
    """One entry per line; blank lines and ``#`` comments are skipped."""
    out = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(" ".join(line.split()).lower())
    return out


def _seed_dir() -> Path:
    return Path(str(resources.files("nltest") / "data" / "lexicon"))


def _collect(directories: list[Path]) -> Lexicon:
    phrases: dict[str, set[str]] = {name: set() for name in PHRASE_FILES}
    closed: list[tuple[str, str, str]] = []
    for name, pos, tag in CLOSED_CLASS_FILES:
        for directory in directories:
            path = directory / f"{name}.txt"
            if not path.is_file():
                continue
            for entry in read_entries(path):
                word, _, override = entry.partition(" ")
                closed.append((word, pos, override.upper() or tag))
    for name in PHRASE_FILES:
        for directory in directories:
            path = directory / f"{name}.txt"
            if path.is_file():
                phrases[name].update(read_entries(path))
    return Lexicon(
        closed_class=tuple(closed),
        **{name: frozenset(values) for name, values in phrases.items()},
    )


@functools.lru_cache(maxsize=None)
def _load_cached(extra: str | None) -> Lexicon:
    dirs = [_seed_dir()]
    if extra:
        path = Path(extra)
        if not path.is_dir():
            raise LexiconError(f"lexicon directory not found: {extra}")
        dirs.append(path)
    return _collect(dirs)


def load_lexicon(extra_dir: str | os.PathLike | None = None) -> Lexicon:
    """Seed lexicon, extended by ``extra_dir`` or the ``NLTEST_LEXICON_DIR`` variable."""
    if extra_dir is None:
        extra_dir = os.environ.get(ENV_LEXICON_DIR) or None
    return _load_cached(str(Path(extra_dir).resolve()) if extra_dir else None)


def default_lexicon() -> Lexicon:
    return _load_cached(None)
