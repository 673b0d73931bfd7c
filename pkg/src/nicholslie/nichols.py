"""Zeroness and linear structure in the Nichols algebra B(V).

The dual generators y_i act on the tensor algebra as skew derivations

    D_i(x_j * v) = delta_ij * v + q_ij^-1 * x_j * D_i(v)

and a homogeneous element is zero in B(V) exactly when every iterated
derivation down to degree zero vanishes.  Collecting the values of all
d-fold descents gives a faithful vector of pairing values per element
(NicholsVector); exact Gaussian elimination on those vectors yields
dim B(V)_alpha and membership tests.  A quantum-symmetrizer rank
computation provides an independent cross-check of the dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braiding import BraidingMatrix
from .freealg import FreeElement, _multidegree_words, multinomial, words_of_multidegree
from .scalar import Scalar

__all__ = [
    "MAX_TERMS_DEFAULT",
    "GuardrailExceeded",
    "NicholsVector",
    "skew_derivation",
    "pairing_vector",
    "is_zero_in_nichols",
    "basis_of_degree",
    "symmetrizer_rank_oracle",
]

MAX_TERMS_DEFAULT = 10**6


class GuardrailExceeded(RuntimeError):
    """A computation would exceed the configured size cap.

    Exact elimination is cubic; refusing early with the offending sizes
    beats an opaque multi-hour run.
    """

    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(f"{what}: needs {needed} entries, cap is {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


def _cap(max_terms) -> int:
    return MAX_TERMS_DEFAULT if max_terms is None else int(max_terms)


@dataclass
class NicholsVector:
    """Pairing values of a homogeneous element against all dual words of
    its multidegree; the element is zero in B(V) iff all values vanish."""

    degree: tuple
    values: dict = field(repr=False)

    def row(self):
        """Values as a list aligned to the sorted dual words."""
        return [self.values[w] for w in sorted(self.values)]

    def is_zero(self) -> bool:
        return not any(self.values.values())


def _homogeneous_degree(u: FreeElement):
    deg = u.degree()  # raises NonHomogeneousError on mixed input
    if deg is None:
        return None
    if sum(deg) == 0:
        raise ValueError("operation needs degree >= 1, got a degree-0 element")
    return deg


def _skew(B: BraidingMatrix, i: int, u: FreeElement) -> FreeElement:
    # single left-to-right pass per word, keeping the running product
    # of q_{i, w_l}^{-1} over the prefix; unit factors are skipped
    inv_row, inv_is_one = B.inverse_row(i)
    out = {}
    for word, coeff in u.terms.items():
        running = coeff
        for k, letter in enumerate(word):
            if letter == i:
                reduced = word[:k] + word[k + 1:]
                acc = out.get(reduced)
                acc = running if acc is None else acc + running
                if acc:
                    out[reduced] = acc
                elif reduced in out:
                    del out[reduced]
            if not inv_is_one[letter - 1]:
                running = running * inv_row[letter - 1]
    elem = FreeElement(u.n, u.order)
    elem.terms = out
    return elem


def skew_derivation(B: BraidingMatrix, i: int, u: FreeElement) -> FreeElement:
    """D_i(u): lowers the multidegree by e_i; zero when u contains no x_i."""
    if not 1 <= i <= B.n:
        raise IndexError(f"generator index {i} out of range 1..{B.n}")
    if B.n != u.n or B.order != u.order:
        raise ValueError("braiding matrix and element have different ambients")
    _homogeneous_degree(u)
    return _skew(B, i, u)


def pairing_vector(B: BraidingMatrix, u: FreeElement, max_terms=None) -> NicholsVector:
    """All iterated pairing values of a homogeneous element.

    The value stored at dual word (j_1, ..., j_d) is the degree-0 scalar
    obtained by applying D_{j_1} first, then D_{j_2}, and so on.
    """
    deg = _homogeneous_degree(u)
    if deg is None:
        raise ValueError("the zero element has no well-defined pairing degree")
    cap = _cap(max_terms)
    size = multinomial(deg)
    if size > cap:
        raise GuardrailExceeded(f"pairing vector at degree {deg}", size, cap)
    zero = Scalar.zero(B.order)
    values = {}

    def descend(elem, alpha, prefix):
        if not elem.terms:
            for tail in _multidegree_words(alpha):
                values[prefix + tail] = zero
            return
        if sum(alpha) == 0:
            values[prefix] = elem.terms.get((), zero)
            return
        for idx, count in enumerate(alpha):
            if count:
                reduced = alpha[:idx] + (count - 1,) + alpha[idx + 1:]
                descend(_skew(B, idx + 1, elem), reduced, prefix + (idx + 1,))

    descend(u, deg, ())
    return NicholsVector(deg, values)


def word_pairing_vector(B: BraidingMatrix, word, max_terms=None) -> NicholsVector:
    """pairing_vector of a single monomial, cached per matrix (monomials
    are re-paired constantly by rank, membership, and support scans)."""
    word = tuple(word)
    cache = getattr(B, "_word_pairing_cache", None)
    if cache is None:
        cache = {}
        object.__setattr__(B, "_word_pairing_cache", cache)
    hit = cache.get(word)
    if hit is None:
        hit = pairing_vector(B, FreeElement.from_word(B.n, B.order, word), max_terms)
        cache[word] = hit
    else:
        # still honor a tighter explicit guardrail
        cap = _cap(max_terms)
        if multinomial(hit.degree) > cap:
            raise GuardrailExceeded(f"pairing vector at degree {hit.degree}", multinomial(hit.degree), cap)
    return hit


def is_zero_in_nichols(B: BraidingMatrix, u: FreeElement) -> bool:
    """Whether a homogeneous element maps to zero in B(V).

    Depth-first descent with early exit: u = 0 iff D_i(u) = 0 in B(V)
    for every generator i occurring in its degree.
    """
    deg = _homogeneous_degree(u)
    if deg is None:
        return True

    def rec(elem, alpha):
        if not elem.terms:
            return True
        if sum(alpha) == 0:
            return not elem.terms.get(())
        for idx, count in enumerate(alpha):
            if count:
                reduced = alpha[:idx] + (count - 1,) + alpha[idx + 1:]
                if not rec(_skew(B, idx + 1, elem), reduced):
                    return False
        return True

    return rec(u, deg)


class _RowReducer:
    """Incremental exact row reduction over lists of Scalar.

    Pivot rows are normalized to a leading 1 and indexed by their lead
    column; insertion order is the deterministic pivot choice.  When
    solving, coefficients over the previously inserted rows are tracked.
    """

    def __init__(self):
        self._by_lead = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._by_lead)

    def _reduced(self, row, track: bool):
        row = list(row)
        combo = {} if track else None
        for lead in sorted(self._by_lead):
            c = row[lead]
            if c:
                prow, support, pcombo = self._by_lead[lead]
                for idx in support:
                    row[idx] = row[idx] - c * prow[idx]
                if track:
                    for tag, v in pcombo.items():
                        acc = combo.get(tag)
                        acc = c * v if acc is None else acc + c * v
                        if acc:
                            combo[tag] = acc
                        elif tag in combo:
                            del combo[tag]
        return row, combo

    def insert(self, row) -> bool:
        """Reduce a row and keep it as a new pivot if independent; returns
        True when the rank grew."""
        tag = self._count
        self._count += 1
        row, combo = self._reduced(row, track=True)
        lead = next((k for k, v in enumerate(row) if v), None)
        if lead is None:
            return False
        inv = row[lead].inv()
        row = [v * inv for v in row]
        support = tuple(k for k, v in enumerate(row) if v)
        # pivot = inv * (original_tag - sum combo[t] * original_t)
        pivot_combo = {t: -(inv * v) for t, v in combo.items()}
        pivot_combo[tag] = inv
        self._by_lead[lead] = (row, support, pivot_combo)
        return True

    def solve(self, row):
        """Coefficients expressing the row over the inserted pivots, keyed
        by insertion tag; None when the row is outside the span."""
        reduced, combo = self._reduced(row, track=True)
        if any(reduced):
            return None
        return combo


def basis_of_degree(B: BraidingMatrix, alpha, max_terms=None):
    """Pivot words spanning B(V)_alpha plus the rank dim B(V)_alpha.

    Every word of the multidegree is paired, then eliminated exactly with
    first-nonzero pivoting in lexicographic word order, so the returned
    pivot set is deterministic.
    """
    alpha = tuple(alpha)
    if len(alpha) != B.n or any(a < 0 for a in alpha):
        raise ValueError(f"bad multidegree {alpha} for rank {B.n}")
    cap = _cap(max_terms)
    m = multinomial(alpha)
    if m * m > cap:
        raise GuardrailExceeded(f"elimination at degree {alpha}", m * m, cap)
    reducer = _RowReducer()
    pivot_words = []
    for word in words_of_multidegree(alpha):
        nv = word_pairing_vector(B, word, max_terms=cap)
        if reducer.insert(nv.row()):
            pivot_words.append(word)
    return tuple(pivot_words), reducer.rank


# -- quantum symmetrizer oracle ---------------------------------------------


def _apply_braid_transposition(B: BraidingMatrix, terms: dict, k: int) -> dict:
    """C_k on a word combination: swap letters k, k+1 (1-based) and scale
    by q_{ab} where (a, b) were the letters in positions (k, k+1)."""
    out = {}
    for word, coeff in terms.items():
        a, b = word[k - 1], word[k]
        swapped = word[: k - 1] + (b, a) + word[k + 1:]
        c = coeff * B.entry(a, b)
        acc = out.get(swapped)
        acc = c if acc is None else acc + c
        if acc:
            out[swapped] = acc
        elif swapped in out:
            del out[swapped]
    return out


def _symmetrize(B: BraidingMatrix, terms: dict, d: int) -> dict:
    """Quantum symmetrizer S_d on the first d tensor positions:
    S_d = (S_{d-1} ox id) o (1 + C_{d-1} + C_{d-1}C_{d-2} + ... + C_{d-1}...C_1)."""
    if d <= 1:
        return terms
    acc = dict(terms)
    for j in range(d - 1, 0, -1):
        t = terms
        for k in range(j, d):
            t = _apply_braid_transposition(B, t, k)
        for word, coeff in t.items():
            cur = acc.get(word)
            cur = coeff if cur is None else cur + coeff
            if cur:
                acc[word] = cur
            elif word in acc:
                del acc[word]
    return _symmetrize(B, acc, d - 1)


def symmetrizer_rank_oracle(B: BraidingMatrix, alpha, max_terms=None) -> int:
    """Rank of the quantum symmetrizer restricted to multidegree alpha.

    Independent of the skew-derivation machinery; must agree with
    basis_of_degree's rank.
    """
    alpha = tuple(alpha)
    if len(alpha) != B.n or any(a < 0 for a in alpha):
        raise ValueError(f"bad multidegree {alpha} for rank {B.n}")
    d = sum(alpha)
    if d == 0:
        raise ValueError("degree-0 component is the base field; rank query needs degree >= 1")
    cap = _cap(max_terms)
    m = multinomial(alpha)
    if m * m > cap:
        raise GuardrailExceeded(f"symmetrizer at degree {alpha}", m * m, cap)
    words = list(words_of_multidegree(alpha))
    one = Scalar.one(B.order)
    zero = Scalar.zero(B.order)
    reducer = _RowReducer()
    rank = 0
    for word in words:
        image = _symmetrize(B, {word: one}, d)
        if reducer.insert([image.get(w, zero) for w in words]):
            rank += 1
    return rank
