"""Words over the alphabet {1, 2, 3} and substitutions acting on them.

Words are plain ``str`` objects made of the digits ``'1'``, ``'2'``, ``'3'``.
"""

import numpy as np

ALPHABET = "123"


def check_word(w):
    bad = set(w) - set(ALPHABET)
    if bad:
        raise ValueError("word contains letters outside {1,2,3}: %r" % sorted(bad))
    return w


def det3(m):
    """Exact determinant of a 3x3 matrix given as nested sequences."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def parikh(w):
    """Letter-count vector of ``w`` as a tuple ``(|w|_1, |w|_2, |w|_3)``."""
    return (w.count("1"), w.count("2"), w.count("3"))


class Substitution:
    """A morphism of the free monoid on {1, 2, 3}.

    >>> s = Substitution("1", "23", "3")
    >>> s("1232")
    '123323'
    """

    __slots__ = ("images", "_table")

    def __init__(self, image1, image2, image3):
        images = (str(image1), str(image2), str(image3))
        for img in images:
            if not img:
                raise ValueError("substitution images must be nonempty")
            check_word(img)
        self.images = images
        self._table = {ord(a): img for a, img in zip(ALPHABET, images)}

    @classmethod
    def from_dict(cls, d):
        return cls(*(d[k] for k in (1, 2, 3)))

    @classmethod
    def identity(cls):
        return cls("1", "2", "3")

    def __call__(self, w):
        return w.translate(self._table)

    def image(self, letter):
        return self.images[int(letter) - 1]

    def compose(self, other):
        """Return ``self o other``, i.e. the map ``w -> self(other(w))``."""
        return Substitution(*(self(img) for img in other.images))

    __mul__ = compose

    def incidence(self):
        """Incidence matrix: entry (i, j) counts letter i+1 in the image of j+1."""
        m = np.zeros((3, 3), dtype=np.int64)
        for j, img in enumerate(self.images):
            m[:, j] = parikh(img)
        return m

    def is_unimodular(self):
        return abs(det3(self.incidence().tolist())) == 1

    def __eq__(self, other):
        return isinstance(other, Substitution) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return ", ".join("%s->%s" % (a, img) for a, img in zip(ALPHABET, self.images))

    def __repr__(self):
        return "Substitution(%r, %r, %r)" % self.images
