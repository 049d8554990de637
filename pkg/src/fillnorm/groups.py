"""Words, presentations, and word-problem oracles.

A presentation declares generators, relators, and one of four oracle kinds
that decide equality of words: ``free``, ``free-abelian``, ``finite``
(multiplication table), or ``surface`` (Dehn reduction for the standard
genus-g presentation, g >= 2).  Group elements carry a canonical form
produced by their oracle; two elements are equal iff the canonical forms
agree, and the identity always has the empty canonical form.

The fixed letter order is: generator 0, its inverse, generator 1, its
inverse, and so on.  Shortlex with respect to this order drives ball
enumeration and every tie-break in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    OracleMismatch,
    PresentationError,
    UnsupportedOracle,
)

DEFAULT_BALL_CAP = 200_000


@dataclass(frozen=True)
class Generator:
    """A named generator at a fixed position in the presentation."""

    index: int
    name: str


class Word:
    """An immutable word: a tuple of (generator index, sign) letters."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        normalized = []
        for item in letters:
            g, s = item
            g = int(g)
            s = int(s)
            if g < 0:
                raise PresentationError(f"negative generator index {g}")
            if s not in (1, -1):
                raise PresentationError(f"letter sign must be +1 or -1, got {s}")
            normalized.append((g, s))
        self.letters = tuple(normalized)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(("Word", self.letters))

    def __repr__(self):
        return f"Word({list(self.letters)!r})"

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def is_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(self.letters, self.letters[1:])
        )

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)


def reduce(word: Word) -> Word:
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    stack = []
    for g, s in word:
        if stack and stack[-1] == (g, -s):
            stack.pop()
        else:
            stack.append((g, s))
    return Word(stack)


def is_cyclically_reduced(word: Word) -> bool:
    if not word.is_reduced():
        return False
    if len(word) >= 2:
        (g0, s0), (g1, s1) = word.letters[0], word.letters[-1]
        if g0 == g1 and s0 == -s1:
            return False
    return True


def letter_key(letter):
    g, s = letter
    return 2 * g + (0 if s == 1 else 1)


def shortlex_key(word: Word):
    return (len(word), tuple(letter_key(l) for l in word))


def parse_word(text: str, names) -> Word:
    """Parse whitespace-separated letters, each ``name`` or ``name^k``.

    ``k`` is a nonzero integer; ``name^k`` expands to ``|k|`` repeated
    letters with the sign of ``k``.  The empty string is the empty word.
    """
    if not isinstance(names, dict):
        names = {n: i for i, n in enumerate(names)}
    letters = []
    for token in text.split():
        name, caret, exponent = token.partition("^")
        if name not in names:
            raise PresentationError(f"unknown generator {name!r} in word {text!r}")
        if caret:
            try:
                k = int(exponent)
            except ValueError:
                raise PresentationError(f"bad exponent in token {token!r}") from None
            if k == 0:
                raise PresentationError(f"zero exponent in token {token!r}")
        else:
            k = 1
        letters.extend([(names[name], 1 if k > 0 else -1)] * abs(k))
    return Word(letters)


def format_word(word: Word, names) -> str:
    """Inverse of parse_word, with runs collapsed back into name^k tokens."""
    tokens = []
    run = None
    for g, s in list(word) + [(-1, 0)]:
        if run is not None and run[0] == (g, s):
            run = (run[0], run[1] + 1)
            continue
        if run is not None:
            (rg, rs), count = run
            k = rs * count
            tokens.append(names[rg] if k == 1 else f"{names[rg]}^{k}")
        run = ((g, s), 1) if g >= 0 else None
    return " ".join(tokens)


# ---------------------------------------------------------------------------
# Oracles.  An oracle turns words into hashable canonical keys and provides
# multiplication, inversion, and a canonical word for every key.


class FreeOracle:
    kind = "free"

    def __init__(self, ngens: int):
        self.ngens = ngens

    @property
    def order(self):
        return 1 if self.ngens == 0 else None

    @property
    def identity_key(self):
        return ()

    def key_of_word(self, word: Word):
        return reduce(word).letters

    def mul_keys(self, a, b):
        out = list(a)
        for g, s in b:
            if out and out[-1] == (g, -s):
                out.pop()
            else:
                out.append((g, s))
        return tuple(out)

    def inv_key(self, a):
        return tuple((g, -s) for g, s in reversed(a))

    def word_of_key(self, key) -> Word:
        return Word(key)

    def length_of_key(self, key) -> int:
        return len(key)


class FreeAbelianOracle:
    kind = "free-abelian"

    def __init__(self, rank: int):
        self.rank = rank

    @property
    def order(self):
        return 1 if self.rank == 0 else None

    @property
    def identity_key(self):
        return (0,) * self.rank

    def key_of_word(self, word: Word):
        vec = [0] * self.rank
        for g, s in word:
            vec[g] += s
        return tuple(vec)

    def mul_keys(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv_key(self, a):
        return tuple(-x for x in a)

    def word_of_key(self, key) -> Word:
        letters = []
        for g, e in enumerate(key):
            letters.extend([(g, 1 if e > 0 else -1)] * abs(e))
        return Word(letters)

    def length_of_key(self, key) -> int:
        return sum(abs(e) for e in key)


class FiniteTableOracle:
    """Finite group given by an explicit multiplication table.

    Elements are the indices ``0 .. n-1`` with identity ``0``; ``table[i][j]``
    is the product.  The canonical word of each element is its shortlex-least
    geodesic in the presentation generators, computed once by breadth-first
    search, so the identity renders as the empty word.
    """

    kind = "finite"

    def __init__(self, table, generator_elements):
        n = len(table)
        if n == 0:
            raise PresentationError("multiplication table must be nonempty")
        for row in table:
            if len(row) != n or any(not (0 <= e < n) for e in row):
                raise PresentationError("multiplication table is not square over 0..n-1")
        for j in range(n):
            if table[0][j] != j or table[j][0] != j:
                raise PresentationError("element 0 must act as the identity")
        for i in range(n):
            if sorted(table[i]) != list(range(n)) or sorted(
                table[j][i] for j in range(n)
            ) != list(range(n)):
                raise PresentationError("multiplication table rows/columns must be permutations")
        # Full associativity check; tables here are small.
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    tab = table[a][b]
                    for c in range(n):
                        if table[tab][c] != table[a][table[b][c]]:
                            raise PresentationError("multiplication table is not associative")
        self.table = [tuple(row) for row in table]
        self.n = n
        self.generator_elements = list(generator_elements)
        if any(not (0 <= e < n) for e in self.generator_elements):
            raise PresentationError("generator images must be table elements")
        self.inverse = [row.index(0) for row in self.table]
        self._words = self._geodesic_words()
        if len(self._words) != n:
            raise PresentationError("generators do not generate the whole table")

    def _geodesic_words(self):
        letters = []
        for g, e in enumerate(self.generator_elements):
            letters.append(((g, 1), e))
            letters.append(((g, -1), self.inverse[e]))
        words = {0: ()}
        layer = [0]
        while layer:
            nxt = []
            for elem in layer:
                for letter, image in letters:
                    target = self.table[elem][image]
                    if target not in words:
                        words[target] = words[elem] + (letter,)
                        nxt.append(target)
            layer = nxt
        return words

    @property
    def order(self):
        return self.n

    @property
    def identity_key(self):
        return 0

    def key_of_word(self, word: Word):
        k = 0
        for g, s in word:
            e = self.generator_elements[g]
            k = self.table[k][e if s == 1 else self.inverse[e]]
        return k

    def mul_keys(self, a, b):
        return self.table[a][b]

    def inv_key(self, a):
        return self.inverse[a]

    def word_of_key(self, key) -> Word:
        return Word(self._words[key])

    def length_of_key(self, key) -> int:
        return len(self._words[key])

    @classmethod
    def cyclic(cls, n: int) -> "FiniteTableOracle":
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(table, [1 % n])


def _inv_letters(letters):
    return tuple((g, -s) for g, s in reversed(letters))


class SurfaceOracle:
    """Word problem for the standard one-relator surface presentation.

    Canonical forms: freely reduce, shorten any subword covering more than
    half of a relator rotation (Dehn's algorithm), then close the result
    under exact half-relator swaps and keep the shortlex-least variant.
    Distinct rotations of the relator and its inverse share subwords of
    length at most one, so every long subword determines its rotation.
    """

    kind = "surface"

    def __init__(self, genus: int):
        if genus < 2:
            raise UnsupportedOracle("surface oracle requires genus >= 2")
        self.genus = genus
        self.ngens = 2 * genus
        rel = []
        for i in range(genus):
            a, b = 2 * i, 2 * i + 1
            rel.extend([(a, 1), (b, 1), (a, -1), (b, -1)])
        self.relator = tuple(rel)
        length = len(self.relator)
        self.half = length // 2
        rotations = set()
        for base in (self.relator, _inv_letters(self.relator)):
            for r in range(length):
                rotations.add(base[r:] + base[:r])
        self._shorten = {}
        self._swap = {}
        for rho in rotations:
            long_prefix = rho[: self.half + 1]
            assert long_prefix not in self._shorten
            self._shorten[long_prefix] = _inv_letters(rho[self.half + 1 :])
            half_prefix = rho[: self.half]
            assert half_prefix not in self._swap
            self._swap[half_prefix] = _inv_letters(rho[self.half :])

    @property
    def order(self):
        return None

    @property
    def identity_key(self):
        return ()

    def _free_reduce(self, letters):
        stack = []
        for g, s in letters:
            if stack and stack[-1] == (g, -s):
                stack.pop()
            else:
                stack.append((g, s))
        return tuple(stack)

    def _dehn_reduce(self, letters):
        w = self._free_reduce(letters)
        q = self.half + 1
        while True:
            found = None
            for i in range(len(w) - q + 1):
                rep = self._shorten.get(w[i : i + q])
                if rep is not None:
                    found = (i, rep)
                    break
            if found is None:
                return w
            i, rep = found
            w = self._free_reduce(w[:i] + rep + w[i + q :])

    def key_of_word(self, word: Word):
        w = self._dehn_reduce(word.letters)
        while True:
            # Close under half swaps; restart from scratch if a swap ever
            # exposes a further shortening (defensive, should not happen on
            # Dehn-reduced words).
            best = w
            seen = {w}
            stack = [w]
            shorter = None
            while stack:
                cur = stack.pop()
                if tuple(map(letter_key, cur)) < tuple(map(letter_key, best)):
                    best = cur
                h = self.half
                for i in range(len(cur) - h + 1):
                    rep = self._swap.get(cur[i : i + h])
                    if rep is None or rep == cur[i : i + h]:
                        continue
                    cand = cur[:i] + rep + cur[i + h :]
                    red = self._dehn_reduce(cand)
                    if len(red) < len(cand):
                        shorter = red
                        break
                    if red not in seen:
                        seen.add(red)
                        stack.append(red)
                if shorter is not None:
                    break
            if shorter is None:
                return best
            w = shorter

    def mul_keys(self, a, b):
        return self.key_of_word(Word(a + b))

    def inv_key(self, a):
        return self.key_of_word(Word(_inv_letters(a)))

    def word_of_key(self, key) -> Word:
        return Word(key)

    def length_of_key(self, key) -> int:
        return len(key)


# ---------------------------------------------------------------------------
# Presentations and group elements.


def _commutator_pair(word: Word):
    """Return (i, j) if the word is the commutator of two distinct generators."""
    if len(word) != 4:
        return None
    (g1, s1), (g2, s2), (g3, s3), (g4, s4) = word.letters
    if g1 == g3 and g2 == g4 and g1 != g2 and (s1, s2, s3, s4) == (1, 1, -1, -1):
        return (g1, g2)
    return None


def _standard_surface_relator(genus: int) -> Word:
    rel = []
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        rel.extend([(a, 1), (b, 1), (a, -1), (b, -1)])
    return Word(rel)


class Presentation:
    """Generators, relators, an oracle kind, and an asphericity flag.

    The aspherical flag is asserted by the caller, never derived; it is
    carried alongside the data so reports can quote it.  Oracle consistency
    is validated where decidable: free presentations take no relators,
    free-abelian ones need the full set of commutator relators, finite
    tables must satisfy every relator, and the surface oracle demands the
    standard genus-g relator.
    """

    def __init__(self, names, relators=(), oracle="free", aspherical=False,
                 table=None, table_generators=None):
        names = list(names)
        for name in names:
            if not name or any(ch.isspace() for ch in name) or "^" in name or "," in name:
                raise PresentationError(f"bad generator name {name!r}")
            if name[0].isdigit() or name[0] == "-":
                raise PresentationError(f"generator name {name!r} may not start with digit or '-'")
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be unique")
        self.generators = tuple(Generator(i, n) for i, n in enumerate(names))
        self.names = tuple(names)

        words = []
        for rel in relators:
            word = parse_word(rel, names) if isinstance(rel, str) else rel
            if word.max_generator() >= len(names):
                raise PresentationError("relator uses an unknown generator index")
            if len(word) == 0 or not is_cyclically_reduced(word):
                raise PresentationError("relators must be nonempty and cyclically reduced")
            words.append(word)
        self.relators = tuple(words)
        self.oracle_kind = oracle
        self.aspherical = bool(aspherical)
        self._oracle = self._build_oracle(table, table_generators)
        sig_extra = tuple(self._oracle.table) if oracle == "finite" else None
        self.signature = (
            oracle,
            self.names,
            tuple(w.letters for w in self.relators),
            sig_extra,
        )
        self._sig_hash = hash(self.signature)
        self._gen_elements = None

    def _build_oracle(self, table, table_generators):
        kind = self.oracle_kind
        ngens = len(self.names)
        if kind == "free":
            if self.relators:
                raise UnsupportedOracle("free oracle cannot decide equality with relators present")
            return FreeOracle(ngens)
        if kind == "free-abelian":
            pairs = set()
            for word in self.relators:
                pair = _commutator_pair(word)
                if pair is None:
                    raise UnsupportedOracle(
                        "free-abelian oracle requires commutator relators x_i x_j x_i^-1 x_j^-1"
                    )
                pairs.add(frozenset(pair))
            expected = {
                frozenset((i, j)) for i in range(ngens) for j in range(i + 1, ngens)
            }
            if pairs != expected:
                raise UnsupportedOracle(
                    "free-abelian oracle requires exactly one commutator relator per generator pair"
                )
            return FreeAbelianOracle(ngens)
        if kind == "finite":
            if table is None:
                raise UnsupportedOracle("finite oracle requires a multiplication table")
            oracle = FiniteTableOracle(table, table_generators)
            if len(oracle.generator_elements) != ngens:
                raise PresentationError("need one table element per generator")
            for word in self.relators:
                if oracle.key_of_word(word) != oracle.identity_key:
                    raise PresentationError("a relator does not hold in the multiplication table")
            return oracle
        if kind == "surface":
            if ngens % 2 != 0 or ngens < 4:
                raise UnsupportedOracle("surface oracle needs 2g generators with g >= 2")
            genus = ngens // 2
            if len(self.relators) != 1 or self.relators[0] != _standard_surface_relator(genus):
                raise UnsupportedOracle(
                    "surface oracle requires the single standard relator [x0,x1][x2,x3]..."
                )
            return SurfaceOracle(genus)
        raise UnsupportedOracle(f"unknown oracle kind {kind!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def free(cls, names, aspherical=True) -> "Presentation":
        return cls(names, (), "free", aspherical)

    @classmethod
    def free_abelian(cls, names, aspherical=None) -> "Presentation":
        names = list(names)
        relators = []
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                relators.append(Word([(i, 1), (j, 1), (i, -1), (j, -1)]))
        if aspherical is None:
            aspherical = len(names) <= 2
        return cls(names, relators, "free-abelian", aspherical)

    @classmethod
    def cyclic(cls, name: str, n: int, aspherical=False) -> "Presentation":
        if n < 1:
            raise PresentationError("cyclic order must be at least 1")
        oracle = FiniteTableOracle.cyclic(n)
        return cls([name], [Word([(0, 1)] * n)], "finite", aspherical,
                   table=oracle.table, table_generators=oracle.generator_elements)

    @classmethod
    def finite_table(cls, names, relators, table, generator_elements,
                     aspherical=False) -> "Presentation":
        return cls(names, relators, "finite", aspherical,
                   table=table, table_generators=generator_elements)

    @classmethod
    def surface(cls, genus: int, names=None, aspherical=True) -> "Presentation":
        if names is None:
            names = []
            for i in range(genus):
                names.extend([f"a{i + 1}", f"b{i + 1}"])
        return cls(names, [_standard_surface_relator(genus)], "surface", aspherical)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self):
        return self._oracle.order

    @property
    def is_finite(self) -> bool:
        return self._oracle.order is not None

    def identity(self) -> "GroupElement":
        return GroupElement(self, self._oracle.identity_key)

    def generator_elements(self):
        if self._gen_elements is None:
            self._gen_elements = [
                GroupElement(self, self._oracle.key_of_word(Word([(g, 1)])))
                for g in range(len(self.names))
            ]
        return self._gen_elements

    def element(self, word) -> "GroupElement":
        if isinstance(word, str):
            word = parse_word(word, self.names)
        if word.max_generator() >= len(self.names):
            raise PresentationError("word uses an unknown generator index")
        return GroupElement(self, self._oracle.key_of_word(word))

    def __repr__(self):
        rels = ", ".join(format_word(w, self.names) for w in self.relators)
        return f"<Presentation {' '.join(self.names)} | {rels} ({self.oracle_kind})>"


class GroupElement:
    """An element in oracle canonical form."""

    __slots__ = ("presentation", "key")

    def __init__(self, presentation: Presentation, key):
        self.presentation = presentation
        self.key = key

    def _same_group(self, other: "GroupElement") -> Presentation:
        if self.presentation is not other.presentation and (
            self.presentation.signature != other.presentation.signature
        ):
            raise OracleMismatch("elements come from different presentations")
        return self.presentation

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        p = self._same_group(other)
        return GroupElement(p, p._oracle.mul_keys(self.key, other.key))

    def inverse(self) -> "GroupElement":
        p = self.presentation
        return GroupElement(p, p._oracle.inv_key(self.key))

    def __pow__(self, n: int) -> "GroupElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.presentation.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self.key == self.presentation._oracle.identity_key

    def word(self) -> Word:
        return self.presentation._oracle.word_of_key(self.key)

    def word_length(self) -> int:
        return self.presentation._oracle.length_of_key(self.key)

    def __str__(self):
        return format_word(self.word(), self.presentation.names)

    def __repr__(self):
        return f"<{str(self) or '1'}>"

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.presentation.signature == other.presentation.signature
            and self.key == other.key
        )

    def __hash__(self):
        return hash((self.presentation._sig_hash, self.key))


def normal_form(presentation: Presentation, word: Word) -> GroupElement:
    """Canonical-form element of a word; equal words yield equal elements."""
    return presentation.element(word)


def mul(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def inv(a: GroupElement) -> GroupElement:
    return a.inverse()


# ---------------------------------------------------------------------------
# Ball enumeration.


def ball_layers(presentation: Presentation, cap=DEFAULT_BALL_CAP, max_radius=None):
    """Yield (radius, layer) pairs in shortlex order, one layer per length.

    Expanding parents in shortlex order through letters in the fixed letter
    order visits each new element first through its shortlex-least geodesic,
    so every layer comes out shortlex sorted.  Stops when a layer is empty
    (finite groups) or when max_radius is reached; raises BudgetExceeded once
    more than ``cap`` elements have been produced.
    """
    oracle = presentation._oracle
    ngens = len(presentation.names)
    letter_keys = []
    for g in range(ngens):
        letter_keys.append(oracle.key_of_word(Word([(g, 1)])))
        letter_keys.append(oracle.key_of_word(Word([(g, -1)])))
    identity = oracle.identity_key
    seen = {identity}
    count = 1
    if count > cap:
        raise BudgetExceeded(f"ball size exceeds cap {cap}")
    yield 0, [GroupElement(presentation, identity)]
    layer = [identity]
    radius = 0
    while layer and (max_radius is None or radius < max_radius):
        nxt = []
        for key in layer:
            for lk in letter_keys:
                candidate = oracle.mul_keys(key, lk)
                if candidate not in seen:
                    seen.add(candidate)
                    nxt.append(candidate)
                    count += 1
                    if count > cap:
                        raise BudgetExceeded(f"ball size exceeds cap {cap}")
        radius += 1
        if nxt:
            yield radius, [GroupElement(presentation, k) for k in nxt]
        layer = nxt


def ball(presentation: Presentation, radius: int, cap=DEFAULT_BALL_CAP):
    """Elements of word length at most ``radius``, in shortlex order."""
    if radius < 0:
        raise PresentationError("ball radius must be nonnegative")
    out = []
    for _, layer in ball_layers(presentation, cap=cap, max_radius=radius):
        out.extend(layer)
    return out


# ---------------------------------------------------------------------------
# Presentation text format.
#
#   generators: x y
#   relators: x y x^-1 y^-1
#   oracle: free-abelian 2
#   aspherical: true
#
# Relators are comma separated on the single ``relators`` line.  Blank lines
# and ``#`` comments are ignored.  For ``oracle: finite`` only single
# generator cyclic presentations <x | x^n> are derived automatically; other
# finite groups must be built through Presentation.finite_table.

_KEYS = ("generators", "relators", "oracle", "aspherical")


def parse_presentation(text: str) -> Presentation:
    data = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise PresentationError(f"expected one of {_KEYS} before ':', got {line!r}")
        if key in data:
            raise PresentationError(f"duplicate key {key!r}")
        data[key] = value.strip()
    for required in ("generators", "oracle"):
        if required not in data:
            raise PresentationError(f"missing required key {required!r}")
    names = data["generators"].split()
    relators = [
        parse_word(tok.strip(), names)
        for tok in data.get("relators", "").split(",")
        if tok.strip()
    ]
    flag_text = data.get("aspherical", "false").lower()
    if flag_text not in ("true", "false"):
        raise PresentationError("aspherical must be true or false")
    aspherical = flag_text == "true"

    fields = data["oracle"].split()
    kind = fields[0] if fields else ""
    if kind == "free":
        if len(fields) != 1:
            raise PresentationError("oracle 'free' takes no parameter")
        return Presentation(names, relators, "free", aspherical)
    if kind == "free-abelian":
        if len(fields) != 2 or not fields[1].isdigit():
            raise PresentationError("expected 'free-abelian <rank>'")
        if int(fields[1]) != len(names):
            raise PresentationError("free-abelian rank must equal the generator count")
        return Presentation(names, relators, "free-abelian", aspherical)
    if kind == "surface":
        if len(fields) != 2 or not fields[1].isdigit():
            raise PresentationError("expected 'surface <genus>'")
        if 2 * int(fields[1]) != len(names):
            raise PresentationError("surface genus g needs exactly 2g generators")
        return Presentation(names, relators, "surface", aspherical)
    if kind == "finite":
        if len(fields) != 1:
            raise PresentationError("oracle 'finite' takes no parameter")
        if len(names) == 1 and len(relators) == 1:
            letters = relators[0].letters
            signs = {s for _, s in letters}
            if len(signs) == 1:
                n = len(letters)
                oracle = FiniteTableOracle.cyclic(n)
                return Presentation(names, relators, "finite", aspherical,
                                    table=oracle.table,
                                    table_generators=oracle.generator_elements)
        raise UnsupportedOracle(
            "finite oracle files support only cyclic <x | x^n>; "
            "use Presentation.finite_table for explicit tables"
        )
    raise PresentationError(f"unknown oracle kind {kind!r}")


def load_presentation(path) -> Presentation:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_presentation(handle.read())


def format_presentation(presentation: Presentation) -> str:
    lines = [
        "generators: " + " ".join(presentation.names),
        "relators: " + ", ".join(
            format_word(w, presentation.names) for w in presentation.relators
        ),
    ]
    kind = presentation.oracle_kind
    if kind == "free-abelian":
        kind = f"free-abelian {len(presentation.names)}"
    elif kind == "surface":
        kind = f"surface {len(presentation.names) // 2}"
    lines.append("oracle: " + kind)
    lines.append("aspherical: " + ("true" if presentation.aspherical else "false"))
    return "\n".join(lines) + "\n"
