"""Rule-based linguistic analysis of test-step prose.

Tagging is deterministic and lexicon driven. Each token gets a coarse POS, a
Penn-style fine tag, a reduced dependency label (ROOT, advmod or other) and a
small morphology set. On top of the tags the module finds imperative verbs,
manner adverbs, vague terms, imperative clauses and conditional clauses.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass

from .lexicon import Lexicon, default_lexicon
from .model import ListSide, Sentence

SPECIFY_PREFIX = "<<SPECIFY:"

_TOKEN_RE = re.compile(
    r"""
    (?P<marker><<SPECIFY:[^>]*>>)
  | (?P<abbr>(?<!\w)(?i:etc\.|e\.g\.|i\.e\.))
  | (?P<word>\w+(?:[-'’.+/]\w+)*)
  | (?P<punct>[^\w\s])
    """,
    re.VERBOSE,
)
_NUMERAL_RE = re.compile(r"^\d+(?:[.,:]\d+)*%?$")

_PUNCT_TAGS = {
    ",": ",", ".": ".", "!": ".", "?": ".", ";": ":", ":": ":", "-": ":",
    "(": "-LRB-", ")": "-RRB-", "[": "-LRB-", "]": "-RRB-",
    "'": "''", '"': "''", "’": "''", "‘": "``", "“": "``", "”": "''",
}
_TERMINALS = frozenset(".!?")
_CLAUSE_PUNCT = frozenset(",;")
_NOUN_PHRASE_OPENERS = frozenset({"DET", "NUM"})

CONDITIONAL_MARKERS = (("in", "case"), ("if",))
UNHANDLED_MARKERS = (("in", "the", "event"), ("as", "long", "as"), ("when",), ("whenever",),
                     ("unless",), ("otherwise",))
# "check if", "see if": "if" introduces an embedded question, not a condition
_COMPLEMENTIZER_HEADS = frozenset(
    {"as", "ask", "check", "confirm", "determine", "know", "see", "test", "verify", "wonder"}
)
# Negative-polarity items: "without any errors" is not vague
_NEGATIVE_POLARITY = frozenset({"any"})


class SentenceClass(str, enum.Enum):
    ACTION = "Action"
    VERIFICATION = "Verification"
    PRECONDITION = "Precondition"


@dataclass(frozen=True)
class Token:
    text: str
    pos: str
    tag: str
    dep: str = "other"
    morph: tuple[str, ...] = ()
    start: int = 0
    end: int = 0

    @property
    def lower(self) -> str:
        return self.text.lower()

    @property
    def is_punct(self) -> bool:
        return self.pos == "PUNCT"


@dataclass(frozen=True)
class Conditional:
    clause: str
    remainder: str
    span: tuple[int, int]  # token range [start, end) of the clause


@dataclass(frozen=True)
class AnnotatedSentence:
    source: Sentence
    tokens: tuple[Token, ...]
    imperative_verbs: tuple[int, ...]
    manner_adverbs: tuple[int, ...]
    vague_terms: tuple[tuple[int, str], ...]
    conditional: Conditional | None
    bounds: tuple[tuple[int, int], ...]  # token ranges of the sentences inside the text
    vague_spans: tuple[tuple[int, int, str], ...] = ()

    @property
    def text(self) -> str:
        return self.source.text

    @property
    def root(self) -> int | None:
        for i, tok in enumerate(self.tokens):
            if tok.dep == "ROOT":
                return i
        return None


@dataclass(frozen=True)
class Clause:
    text: str
    start: int
    end: int
    verbs: tuple[str, ...]


@dataclass(frozen=True)
class SentencePosition:
    step_index: int
    ordinal: int
    list_side: ListSide


# --- tokenization -----------------------------------------------------------


def _raw_tokens(text: str) -> list[tuple[str, str, int, int]]:
    return [(m.lastgroup, m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def _sentence_bounds(raw, text: str) -> tuple[tuple[int, int], ...]:
    bounds = []
    start = 0
    for i, (kind, value, _, end) in enumerate(raw):
        if kind == "punct" and value in _TERMINALS and i + 1 < len(raw):
            if text[end:raw[i + 1][2]].isspace() and raw[i + 1][1] not in _TERMINALS:
                bounds.append((start, i + 1))
                start = i + 1
    if start < len(raw) or not bounds:
        bounds.append((start, len(raw)))
    return tuple(bounds)


def _match_at(words: list[str], i: int, sequences) -> tuple[str, ...] | None:
    for seq in sequences:
        if tuple(words[i:i + len(seq)]) == seq:
            return seq
    return None


def _base_tag(kind: str, value: str, prev: tuple[str, str] | None, lex: Lexicon) -> tuple[str, str, str]:
    low = value.lower()
    if kind == "marker":
        return "X", "XX", "other"
    if kind == "abbr":
        return "X", "FW", "other"
    if kind == "punct":
        return "PUNCT", _PUNCT_TAGS.get(value, "SYM"), "other"
    closed = lex.closed_tags.get(low)
    if closed:
        return closed[0], closed[1], "other"
    if _NUMERAL_RE.match(value):
        return "NUM", "CD", "other"
    # "the print dialog", "your updates": verb-shaped words inside a noun phrase
    in_noun_phrase = prev is not None and (
        prev[0] in _NOUN_PHRASE_OPENERS or prev[0] == "ADJ" or prev[1] == "PRP$"
    )
    # "press Play", "click Print": a capitalized word mid-sentence names a control
    proper = value[:1].isupper() and prev is not None and prev[1] != "."
    if low in lex.action_verbs or low in lex.cue_verbs:
        if (in_noun_phrase or proper) and low in lex.action_verbs:
            return "NOUN", "NN", "other"
        return "VERB", "VB", "other"
    if low in lex.finite_cues:
        return "VERB", "VBD" if low.endswith("ed") else "VBZ", "other"
    if not in_noun_phrase:
        if (low.endswith("s") and low[:-1] in lex.action_verbs) or (
            low.endswith("es") and low[:-2] in lex.action_verbs
        ):
            return "VERB", "VBZ", "other"
    if low in ("etc",):
        return "X", "FW", "other"
    if len(low) > 4 and low.endswith("ly"):
        return "ADV", "RB", "advmod"
    if low in lex.ambiguity_terms:
        return "ADV", "RB", "advmod"
    if len(low) > 3 and low.endswith("s") and not low.endswith(("ss", "us", "is")):
        return "NOUN", "NNS", "other"
    return "NOUN", "NN", "other"


def _skippable(tok: Token, low_words: list[str], i: int, lex: Lexicon) -> int:
    """Length of a run starting at ``i`` that cannot open a clause, or 0."""
    if tok.pos in ("PUNCT", "X") or (tok.pos == "ADV"):
        return 1
    seq = _match_at(low_words, i, lex.connector_sequences)
    return len(seq) if seq else 0


def _head(tokens, low_words, start: int, end: int, lex: Lexicon) -> int | None:
    i = start
    while i < end:
        skip = _skippable(tokens[i], low_words, i, lex)
        if not skip:
            return i
        i += skip
    return None


def _separator_len(tokens, low_words, i: int, lex: Lexicon) -> int:
    tok = tokens[i]
    if tok.is_punct and tok.text in _CLAUSE_PUNCT:
        return 1
    seq = _match_at(low_words, i, lex.connector_sequences)
    return len(seq) if seq else 0


def _separator_runs(tokens, low_words, start: int, end: int, lex: Lexicon) -> list[tuple[int, int]]:
    """Maximal runs of separator tokens inside ``[start, end)``, outside brackets."""
    depth = [0] * (end + 1)
    level = 0
    for k in range(end):
        depth[k] = level
        if tokens[k].text in "([":
            level += 1
            depth[k] = level
        elif tokens[k].text in ")]":
            level = max(0, level - 1)
    runs = []
    i = start
    while i < end:
        if depth[i]:
            i += 1
            continue
        j = i
        while j < end and not depth[j]:
            n = _separator_len(tokens, low_words, j, lex)
            if not n:
                break
            j += n
        if j > i:
            runs.append((i, min(j, end)))
            i = j
        else:
            i += 1
    return runs


def tokenize_and_tag(sentence: Sentence, lexicon: Lexicon | None = None) -> AnnotatedSentence:
    lex = lexicon or default_lexicon()
    text = sentence.text
    if not text.strip():
        raise ValueError("cannot annotate an empty sentence")
    raw = _raw_tokens(text)
    tokens: list[Token] = []
    prev = None
    for kind, value, start, end in raw:
        pos, tag, dep = _base_tag(kind, value, prev, lex)
        tokens.append(Token(value, pos, tag, dep, (), start, end))
        prev = (pos, tag)
    low_words = [t.lower for t in tokens]
    bounds = _sentence_bounds(raw, text)

    imperative: list[int] = []
    for b_start, b_end in bounds:
        heads = []
        first = _head(tokens, low_words, b_start, b_end, lex)
        if first is not None:
            heads.append((first, True))
        for _, run_end in _separator_runs(tokens, low_words, b_start, b_end, lex):
            h = _head(tokens, low_words, run_end, b_end, lex)
            if h is not None and h != first:
                heads.append((h, False))
        root_set = False
        for h, initial in sorted(set(heads)):
            tok = tokens[h]
            nxt = tokens[h + 1] if h + 1 < b_end else None
            followed_by_verb = nxt is not None and nxt.pos == "VERB"
            if tok.pos == "VERB" and tok.tag == "VB" and not followed_by_verb:
                presumed = False
            elif (
                initial
                and tok.pos == "NOUN"
                and tok.text[:1].isupper()
                and nxt is not None
                and (nxt.pos in _NOUN_PHRASE_OPENERS or nxt.tag == "PRP$")
            ):
                presumed = True
            else:
                continue
            dep = "other" if root_set else "ROOT"
            root_set = True
            tokens[h] = Token(tok.text, "VERB", "VB", dep, ("VerbForm=Inf",), tok.start, tok.end)
            opens_cue = _match_at(low_words, h, lex.verification_sequences) is not None
            if presumed or (tok.lower in lex.action_verbs and not opens_cue):
                imperative.append(h)

    manner = tuple(i for i, t in enumerate(tokens) if t.dep == "advmod")
    vague_spans = _vague_spans(tokens, low_words, bounds, lex)
    return AnnotatedSentence(
        source=sentence,
        tokens=tuple(tokens),
        imperative_verbs=tuple(sorted(imperative)),
        manner_adverbs=manner,
        vague_terms=tuple((s, term) for s, _, term in vague_spans),
        conditional=_conditional(text, tokens, low_words, bounds),
        bounds=bounds,
        vague_spans=vague_spans,
    )


@functools.lru_cache(maxsize=1 << 16)
def _annotate_cached(sentence: Sentence, lexicon: Lexicon) -> AnnotatedSentence:
    return tokenize_and_tag(sentence, lexicon)


def annotate(sentence: Sentence | str, lexicon: Lexicon | None = None) -> AnnotatedSentence:
    """Memoized :func:`tokenize_and_tag`."""
    if isinstance(sentence, str):
        sentence = Sentence(sentence)
    return _annotate_cached(sentence, lexicon or default_lexicon())


# --- ambiguity ----------------------------------------------------------------


def _vague_spans(tokens, low_words, bounds, lex: Lexicon) -> tuple[tuple[int, int, str], ...]:
    spans = []
    for b_start, b_end in bounds:
        negated = False
        i = b_start
        while i < b_end:
            seq = _match_at(low_words[:b_end], i, lex.ambiguity_sequences)
            if seq and not (negated and seq[0] in _NEGATIVE_POLARITY and len(seq) == 1):
                spans.append((i, i + len(seq), " ".join(seq)))
                i += len(seq)
                continue
            if low_words[i] in lex.negators:
                negated = True
            i += 1
    return tuple(spans)


def ambiguous_spans(annotated: AnnotatedSentence) -> list[tuple[int, int, str]]:
    """Token ranges ``[start, end)`` of every ambiguous term, in order."""
    spans = {s: (s, e, term) for s, e, term in annotated.vague_spans}
    covered = {i for s, e, _ in annotated.vague_spans for i in range(s, e)}
    for i in annotated.manner_adverbs:
        if i not in covered:
            spans[i] = (i, i + 1, annotated.tokens[i].lower)
    return [spans[k] for k in sorted(spans)]


def find_ambiguous_terms(annotated: AnnotatedSentence, lexicon: Lexicon | None = None) -> list[tuple[int, str]]:
    return [(s, term) for s, _, term in ambiguous_spans(annotated)]


# --- clauses ------------------------------------------------------------------


def clause_segments(annotated: AnnotatedSentence, lexicon: Lexicon | None = None):
    """Split the token stream at every separator run and sentence boundary.

    Returns ``(segments, separators)``: ``segments`` are content token ranges in
    order; separator runs between two segments are dropped from both.
    """
    lex = lexicon or default_lexicon()
    tokens = annotated.tokens
    low_words = [t.lower for t in tokens]
    segments: list[tuple[int, int]] = []
    for b_start, b_end in annotated.bounds:
        cursor = b_start
        for run_start, run_end in _separator_runs(tokens, low_words, b_start, b_end, lex):
            if run_start == b_start:
                continue  # a leading connector stays with its clause
            if run_end >= b_end or all(t.is_punct for t in tokens[run_end:b_end]):
                continue  # trailing separator
            segments.append((cursor, run_start))
            cursor = run_end
        segments.append((cursor, b_end))
    return [seg for seg in segments if seg[0] < seg[1]]


def _segment_stats(annotated: AnnotatedSentence, seg: tuple[int, int]) -> tuple[int, int]:
    start, end = seg
    verbs = sum(1 for i in annotated.imperative_verbs if start <= i < end)
    words = sum(1 for t in annotated.tokens[start:end] if not t.is_punct)
    return verbs, words


def _best_partition(stats: list[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """Maximum-count grouping of consecutive segments where every group has an
    imperative verb and two words; among maximal groupings the one whose cuts
    fall as late as possible (leftover segments join the preceding clause)."""
    m = len(stats)
    best: list[int | None] = [None] * (m + 1)
    best[m] = 0
    for i in range(m - 1, -1, -1):
        verbs = words = 0
        for e in range(i, m):
            verbs += stats[e][0]
            words += stats[e][1]
            if verbs >= 1 and words >= 2 and best[e + 1] is not None:
                cand = best[e + 1] + 1
                if best[i] is None or cand > best[i]:
                    best[i] = cand
    if best[0] is None:
        return None
    groups = []
    i = 0
    while i < m:
        verbs = words = 0
        chosen = None
        for e in range(i, m):
            verbs += stats[e][0]
            words += stats[e][1]
            if verbs >= 1 and words >= 2 and best[e + 1] is not None and best[e + 1] == best[i] - 1:
                chosen = e
        groups.append((i, chosen))
        i = chosen + 1
    return groups


def imperative_clauses(annotated: AnnotatedSentence, lexicon: Lexicon | None = None) -> list[Clause]:
    """Imperative clauses of a sentence; the whole text when it cannot be split."""
    tokens = annotated.tokens
    text = annotated.text
    whole_verbs = tuple(tokens[i].lower for i in annotated.imperative_verbs)
    segments = clause_segments(annotated, lexicon)
    if len(annotated.imperative_verbs) <= 1 or len(segments) <= 1:
        return [Clause(text, 0, len(tokens), whole_verbs)]
    groups = _best_partition([_segment_stats(annotated, s) for s in segments])
    if groups is None or len(groups) == 1:
        return [Clause(text, 0, len(tokens), whole_verbs)]
    out = []
    for first, last in groups:
        start, end = segments[first][0], segments[last][1]
        verbs = tuple(tokens[i].lower for i in annotated.imperative_verbs if start <= i < end)
        out.append(Clause(text[tokens[start].start:tokens[end - 1].end], start, end, verbs))
    return out


def split_imperative_clauses(annotated: AnnotatedSentence, lexicon: Lexicon | None = None) -> list[str]:
    return [c.text for c in imperative_clauses(annotated, lexicon)]


def imperative_clause_count(annotated: AnnotatedSentence, lexicon: Lexicon | None = None) -> int:
    return sum(1 for c in imperative_clauses(annotated, lexicon) if c.verbs)


# --- conditionals -------------------------------------------------------------


def _normalize(text: str) -> str:
    text = " ".join(text.split())
    return re.sub(r"\s+([,.;:!?)])", r"\1", text)


def _find_marker(low_words, start, end, markers):
    for i in range(start, end):
        for seq in markers:
            if tuple(low_words[i:i + len(seq)]) == seq:
                if seq == ("if",) and i > start and low_words[i - 1] in _COMPLEMENTIZER_HEADS:
                    continue
                return i, seq
    return None


def _conditional(text: str, tokens, low_words, bounds) -> Conditional | None:
    for b_start, b_end in bounds:
        found = _find_marker(low_words, b_start, b_end, CONDITIONAL_MARKERS)
        if found is None:
            continue
        m, _ = found
        content_end = b_end
        while content_end > m and tokens[content_end - 1].is_punct and tokens[content_end - 1].text in _TERMINALS:
            content_end -= 1
        first_word = next((i for i in range(b_start, b_end) if not tokens[i].is_punct), b_start)
        if m == first_word:
            comma = next(
                (i for i in range(m + 1, content_end) if tokens[i].text == ","), None
            )
            c_end = comma if comma is not None else content_end
            cut_start = tokens[m].start
            cut_end = tokens[comma].end if comma is not None else tokens[b_end - 1].end
        else:
            c_end = content_end
            cut_start = tokens[m].start
            cut_end = tokens[content_end - 1].end
        if c_end <= m:
            continue
        clause = text[tokens[m].start:tokens[c_end - 1].end]
        left = text[:cut_start].rstrip().rstrip(",;").rstrip()
        right = text[cut_end:].strip()
        if right and right[0] in ".!?;:,)":
            remainder = left + right
        else:
            remainder = f"{left} {right}"
        remainder = _normalize(remainder)
        if not any(ch.isalnum() for ch in remainder):
            remainder = ""
        return Conditional(clause, remainder, (m, c_end))
    return None


def extract_conditional_clause(annotated: AnnotatedSentence) -> tuple[str, str] | None:
    """Return ``(clause, remainder)`` when the sentence holds an "if"/"in case" clause."""
    cond = annotated.conditional
    return None if cond is None else (cond.clause, cond.remainder)


def unhandled_conditional_markers(annotated: AnnotatedSentence) -> list[str]:
    low_words = [t.lower for t in annotated.tokens]
    found = []
    for b_start, b_end in annotated.bounds:
        hit = _find_marker(low_words, b_start, b_end, UNHANDLED_MARKERS)
        if hit:
            found.append(" ".join(hit[1]))
    return found


# --- classification -------------------------------------------------------------


def _opens_with(annotated: AnnotatedSentence, sequences, lex: Lexicon) -> bool:
    low_words = [t.lower for t in annotated.tokens]
    b_start, b_end = annotated.bounds[0]
    head = _head(annotated.tokens, low_words, b_start, b_end, lex)
    return head is not None and _match_at(low_words, head, sequences) is not None


def _main_verb(annotated: AnnotatedSentence) -> int | None:
    root = annotated.root
    if root is not None:
        return root
    return next((i for i, t in enumerate(annotated.tokens) if t.pos == "VERB"), None)


def classify_sentence(
    annotated: AnnotatedSentence, position: SentencePosition, lexicon: Lexicon | None = None
) -> SentenceClass:
    lex = lexicon or default_lexicon()
    if annotated.source.is_placeholder:
        return SentenceClass.VERIFICATION
    if (
        position.list_side is ListSide.ACTIONS
        and position.step_index == 1
        and position.ordinal == 1
        and _opens_with(annotated, lex.precondition_sequences, lex)
    ):
        return SentenceClass.PRECONDITION
    if _opens_with(annotated, lex.verification_sequences, lex):
        return SentenceClass.VERIFICATION
    main = _main_verb(annotated)
    if main is not None:
        low_words = [t.lower for t in annotated.tokens]
        if _match_at(low_words, main, lex.verification_sequences):
            return SentenceClass.VERIFICATION
    if annotated.imperative_verbs:
        return SentenceClass.ACTION
    if position.list_side is ListSide.VERIFICATIONS:
        return SentenceClass.VERIFICATION
    return SentenceClass.ACTION
