"""S-adic words, factor complexity and discrepancy.

The S-adic word of a direction ``v`` is ``sigma_{i1} sigma_{i2} ... (1)`` where
``i1 i2 ...`` is the coding of ``v``.  For integer directions the orbit
terminates on a multiple of a basis vector and yields a finite word whose
letter counts are exactly ``v``.
"""

from fractions import Fraction

import numpy as np

from .algorithms import algorithm, is_exact
from .errors import DegenerateVectorError, LoopError, MCFError, NonIntegerError, StallError
from .words import ALPHABET, Substitution, check_word, parikh  # noqa: F401

MAX_COMPOSITIONS = 1000


def incidence(s):
    return s.incidence()


def apply(s, w):
    return s(w)


def _compose_truncated(outer_images, sub, length):
    # images of outer o sub, each cut to ``length`` letters
    table = {ord(a): img for a, img in zip(ALPHABET, outer_images)}
    return tuple(img.translate(table)[:length] for img in sub.images)


def _s_adic(algo, v, length, max_depth):
    # Returns (prefix, complete).  ``complete`` is False when max_depth
    # substitutions produce fewer than ``length`` letters.
    v = tuple(float(c) for c in v)
    it = algo.coding_iterator(v)
    subs = algo.substitutions()
    first = subs[next(it)]
    tail = ALPHABET  # images of sigma_{i2} o ... o sigma_{iK}, truncated
    previous = None
    depth = 1
    while True:
        seeds = [img for img in tail if img[0] == "1"]
        w = first(seeds[0] if seeds else tail[0])[:length]
        if len(w) >= length and w == previous:
            return w, True
        if depth >= max_depth:
            return w, len(w) >= length
        previous = w
        try:
            label = next(it)
        except DegenerateVectorError:
            if len(w) >= length:
                return w, True
            raise
        tail = _compose_truncated(tail, subs[label], length)
        depth += 1


def s_adic_prefix(algo, v, target_len):
    """First ``target_len`` letters of the S-adic word of direction ``v``.

    The word is ``sigma_{i1}(u)`` where ``u`` is the limit word of the tail
    ``sigma_{i2} sigma_{i3} ...`` that starts with the letter 1.  At depth K
    the seed letter is the smallest letter whose image under
    ``sigma_{i2} o ... o sigma_{iK}`` starts with 1; when every first-letter
    map fixes 1 this is just ``sigma_{i1} ... sigma_{iK}(1)``.  Composition
    stops once two consecutive depths give the same prefix.
    """
    algo = algorithm(algo)
    if target_len < 1:
        raise ValueError("target_len must be >= 1")
    w, complete = _s_adic(algo, v, target_len, MAX_COMPOSITIONS)
    if not complete:
        raise StallError(
            "S-adic prefix of %s for %s still shorter than %d after %d compositions"
            % (algo.name, tuple(v), target_len, MAX_COMPOSITIONS)
        )
    return w


def s_adic_word(algo, v, n=100, length=10000):
    """S-adic word built from the first ``n`` substitutions of the coding, cut
    to ``length`` letters.

    Unlike :func:`s_adic_prefix` the result may be shorter than ``length``
    when the coding grows slowly (Fully Subtractive on ``(1, e, pi)`` gives 41
    letters).  Composition stops early once the prefix is settled.
    """
    algo = algorithm(algo)
    return _s_adic(algo, v, length, n)[0]


def integer_coding(algo, v):
    """Run ``algo`` exactly on a positive integer vector.

    Returns ``(labels, j, g)`` where the orbit ends on ``g * e_j``.
    """
    algo = algorithm(algo)
    start = tuple(v)
    if not is_exact(start) or any(int(c) != c or c <= 0 for c in start):
        raise ValueError("integer direction must have positive integer entries: %r" % (v,))
    x = tuple(int(c) for c in start)
    labels = []
    seen = {x}
    while sum(1 for c in x if c != 0) > 1:
        label, y = algo.step(x)
        if any(isinstance(c, Fraction) for c in y):
            raise NonIntegerError(str(algo), start, y)
        if y in seen:
            raise LoopError(str(algo), start, y)
        seen.add(y)
        labels.append(label)
        x = y
    j = next(i for i in range(3) if x[i] != 0)
    return labels, j, x[j]


def s_adic_word_integer(algo, v):
    """Finite S-adic word with Parikh vector exactly ``v``."""
    algo = algorithm(algo)
    labels, j, g = integer_coding(algo, v)
    subs = algo.substitutions()
    w = ALPHABET[j] * g
    for label in reversed(labels):
        w = subs[label](w)
    return w


def factor_complexity(w, n_max):
    """``[p(0), ..., p(n_max)]`` with ``p(n)`` the number of distinct length-n factors."""
    if len(w) < n_max:
        raise ValueError("word of length %d too short for n_max=%d" % (len(w), n_max))
    return [len({w[i:i + n] for i in range(len(w) - n + 1)}) for n in range(n_max + 1)]


def discrepancy(w, v):
    """Max over prefixes and letters of ``| |p|_i - |p| v_i / |v| |``."""
    check_word(w)
    if tuple(parikh(w)) != tuple(v):
        raise MCFError("Parikh vector %s of word does not match %s" % (parikh(w), tuple(v)))
    if not w:
        return 0.0
    letters = np.frombuffer(w.encode("ascii"), dtype=np.uint8) - ord("1")
    counts = np.zeros((len(w), 3))
    counts[np.arange(len(w)), letters] = 1
    counts = counts.cumsum(axis=0)
    freq = np.asarray(v, dtype=float) / float(sum(v))
    k = np.arange(1, len(w) + 1)[:, None]
    return float(np.abs(counts - k * freq).max())


def compositions3(total):
    """Positive integer vectors ``(v1, v2, v3)`` with ``v1 + v2 + v3 = total``."""
    for v1 in range(1, total - 1):
        for v2 in range(1, total - v1):
            yield (v1, v2, total - v1 - v2)


def _discrepancy_entry(algo, v):
    try:
        return discrepancy(s_adic_word_integer(algo, v), v)
    except (LoopError, NonIntegerError) as e:
        return e


def discrepancy_statistics(algo, total, executor=None):
    """Discrepancy of the integer S-adic word of every positive vector of sum ``total``.

    Values are floats, or the ``LoopError``/``NonIntegerError`` raised for that
    vector.  Keys come in lexicographic order whatever the executor.
    """
    algo = algorithm(algo)
    if total < 3:
        raise ValueError("total must be >= 3")
    vectors = list(compositions3(total))
    if executor is None:
        values = [_discrepancy_entry(algo, v) for v in vectors]
    else:
        values = list(executor.map(_discrepancy_entry, [algo.name] * len(vectors), vectors,
                                   chunksize=256))
    return dict(zip(vectors, values))


__all__ = [
    "Substitution",
    "apply",
    "compositions3",
    "discrepancy",
    "discrepancy_statistics",
    "factor_complexity",
    "incidence",
    "integer_coding",
    "s_adic_prefix",
    "s_adic_word",
    "s_adic_word_integer",
]
