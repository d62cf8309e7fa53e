"""
Words and word polynomials with the shuffle product
"""
import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from pydantic import ValidationError

from src.models import ContentMismatchError, ToolkitError, WordPolyTerm
from src.quiver.core import GradedDim


Word = Tuple[int, ...]


def check_word(word: Sequence[int], n: int) -> Word:
    word = tuple(int(x) for x in word)
    if any(not 1 <= x <= n for x in word):
        raise ContentMismatchError(f"Word {list(word)} has letters outside 1..{n}")
    return word


def content(word: Sequence[int], n: int) -> GradedDim:
    """Number of occurrences of each letter 1..n"""
    word = check_word(word, n)
    d = [0] * n
    for x in word:
        d[x - 1] += 1
    return tuple(d)


def format_word(word: Sequence[int]) -> str:
    return f"w[{','.join(str(x) for x in word)}]"


@dataclass(frozen=True)
class WordPoly:
    """
    Finitely supported integer combination of words

    Terms are kept merged, without zero coefficients, sorted by word.
    """
    terms: Tuple[Tuple[Word, int], ...] = ()

    def __post_init__(self):
        merged: Dict[Word, int] = {}
        for word, coeff in self.terms:
            word = tuple(word)
            merged[word] = merged.get(word, 0) + int(coeff)
        object.__setattr__(self, "terms", tuple((w, c) for w, c in sorted(merged.items()) if c))

    @classmethod
    def from_dict(cls, coeffs: Dict[Word, int]) -> "WordPoly":
        return cls(tuple(coeffs.items()))

    @classmethod
    def word(cls, *letters: int) -> "WordPoly":
        return cls(((tuple(letters), 1),))

    @classmethod
    def unit(cls) -> "WordPoly":
        return cls((((), 1),))

    def as_dict(self) -> Dict[Word, int]:
        return dict(self.terms)

    def coefficient(self, word: Sequence[int]) -> int:
        return self.as_dict().get(tuple(word), 0)

    def __iter__(self) -> Iterator[Tuple[Word, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "WordPoly") -> "WordPoly":
        return WordPoly(self.terms + other.terms)

    def __neg__(self) -> "WordPoly":
        return WordPoly(tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        return self + (-other)

    def __mul__(self, scalar: int) -> "WordPoly":
        return WordPoly(tuple((w, c * scalar) for w, c in self.terms))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_wordpoly(self)

    def to_json(self) -> List[dict]:
        return [WordPolyTerm(word=list(w), coeff=c).model_dump() for w, c in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "WordPoly":
        try:
            terms = [WordPolyTerm(**item) for item in data]
        except (TypeError, ValidationError) as e:
            raise ToolkitError(f"Malformed word polynomial: {e}")
        return cls(tuple((tuple(t.word), t.coeff) for t in terms))


def format_wordpoly(p: WordPoly) -> str:
    """Render as "2 w[4,2,3] + w[1] - 3 w[2,2]" """
    if not p:
        return "0"
    parts = []
    for k, (word, coeff) in enumerate(p.terms):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = format_word(word) if mag == 1 else f"{mag} {format_word(word)}"
        parts.append(f"{'-' if sign == '-' else ''}{body}" if k == 0 else f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(r"^([+-]?)\s*(\d*)\s*w\[([\d,\s]*)\]$")


def parse_wordpoly(text: str) -> WordPoly:
    """Inverse of format_wordpoly"""
    text = text.strip()
    if text in ("", "0"):
        return WordPoly()
    chunks = re.findall(r"[+-]?\s*\d*\s*w\[[^\]]*\]", text)
    if not chunks or re.sub(r"\s", "", "".join(chunks)) != re.sub(r"\s", "", text):
        raise ToolkitError(f"Cannot read word polynomial {text!r}")
    terms = []
    for chunk in chunks:
        match = _TERM.match(chunk.strip())
        if not match:
            raise ToolkitError(f"Cannot read term {chunk!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = int(match.group(2)) if match.group(2) else 1
        letters = tuple(int(x) for x in match.group(3).split(",") if x.strip())
        terms.append((letters, sign * coeff))
    return WordPoly(tuple(terms))


def shuffle_words(u: Word, v: Word) -> Iterator[Word]:
    """Every interleaving of u and v, one per choice of positions for u"""
    total = len(u) + len(v)
    for positions in combinations(range(total), len(u)):
        chosen = set(positions)
        iu, iv = iter(u), iter(v)
        yield tuple(next(iu) if k in chosen else next(iv) for k in range(total))


def shuffle(p: WordPoly, q: WordPoly) -> WordPoly:
    """Bilinear shuffle product"""
    out: Counter = Counter()
    for u, a in p:
        for v, b in q:
            for w in shuffle_words(u, v):
                out[w] += a * b
    return WordPoly.from_dict(dict(out))


def derivation(i: int, p: WordPoly) -> WordPoly:
    """Strip a leading letter i; words starting otherwise vanish"""
    return WordPoly(tuple((w[1:], c) for w, c in p if w and w[0] == i))


def reverse(p: WordPoly) -> WordPoly:
    return WordPoly(tuple((w[::-1], c) for w, c in p))


def words_of_content(d: Sequence[int]) -> Iterator[Word]:
    """All words with d_k copies of letter k, in lexicographic order"""
    remaining = list(d)
    total = sum(remaining)
    prefix: List[int] = []

    def walk() -> Iterator[Word]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for k, left in enumerate(remaining):
            if left:
                remaining[k] -= 1
                prefix.append(k + 1)
                yield from walk()
                prefix.pop()
                remaining[k] += 1

    yield from walk()


def comult_expand(word: Sequence[int], d1: Sequence[int], d2: Sequence[int]) -> List[Tuple[Word, Word]]:
    """
    Splittings of a word into complementary subwords of contents d1 and d2

    One pair per choice of positions, so repeated pairs carry multiplicity.

    Raises:
        ContentMismatchError: If content(word) != d1 + d2
    """
    n = len(d1)
    if len(d2) != n:
        raise ContentMismatchError(f"Contents {tuple(d1)} and {tuple(d2)} have different lengths")
    word = check_word(word, n)
    expected = tuple(a + b for a, b in zip(d1, d2))
    if content(word, n) != expected:
        raise ContentMismatchError(f"Word {list(word)} does not have content {expected}")
    target = tuple(d1)
    pairs = []
    for positions in combinations(range(len(word)), sum(d1)):
        first = tuple(word[k] for k in positions)
        if content(first, n) != target:
            continue
        chosen = set(positions)
        second = tuple(x for k, x in enumerate(word) if k not in chosen)
        pairs.append((first, second))
    return pairs
