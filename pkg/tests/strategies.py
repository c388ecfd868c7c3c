"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from hyperschur.hypercomb import HYPER, PLAIN, enumerate_hypercompositions, group_elements, tuple_labels
from hyperschur.schurcat import enumerate_hmat
from hyperschur.webdsl import Chain, Generator, Kind, Layer

MODES = st.sampled_from([HYPER, PLAIN])


@st.composite
def objects(draw, n=st.integers(1, 3), mode=MODES):
    return draw(st.sampled_from(enumerate_hypercompositions(draw(n), draw(mode))))


@st.composite
def object_triples(draw, max_n=3):
    mode = draw(MODES)
    objs = enumerate_hypercompositions(draw(st.integers(1, max_n)), mode)
    return tuple(draw(st.sampled_from(objs)) for _ in range(3))


@st.composite
def basis_elements(draw, target, source):
    return draw(st.sampled_from(enumerate_hmat(target, source)))


@st.composite
def group_and_tuple(draw):
    lam = draw(objects())
    n = lam.degree
    elems = list(group_elements(n, lam.mode))
    return lam, draw(st.sampled_from(elems)), draw(st.sampled_from(elems)), draw(st.sampled_from(tuple_labels(lam)))


@st.composite
def layers_on(draw, left, center, mode):
    """A random layer whose bottom interface is ``left | center``."""
    gens, k = [], 0
    axis = None
    reserve_last = False
    if mode is HYPER:
        choices = ["none"] if center == 0 else ["ID"]
        if center >= 2:
            choices.append("S")
        if left:
            choices += ["M", "X"]
        pick = draw(st.sampled_from(choices))
        if pick == "ID":
            axis = Generator(Kind.AXIS_ID, (center,))
        elif pick == "S":
            a = draw(st.integers(1, center // 2))
            axis = Generator(Kind.AXIS_SPLIT, (a, center - 2 * a))
        elif pick in ("M", "X"):
            kind = Kind.AXIS_MERGE if pick == "M" else Kind.AXIS_CROSS
            axis = Generator(kind, (left[-1], center))
            reserve_last = True
    usable = left[:-1] if reserve_last else left
    while k < len(usable):
        options = ["id"]
        if usable[k] >= 2:
            options.append("s")
        if k + 1 < len(usable):
            options += ["m", "x"]
        pick = draw(st.sampled_from(options))
        if pick == "id":
            gens.append(Generator(Kind.ID, (usable[k],)))
            k += 1
        elif pick == "s":
            p = draw(st.integers(1, usable[k] - 1))
            gens.append(Generator(Kind.SPLIT, (p, usable[k] - p)))
            k += 1
        else:
            kind = Kind.MERGE if pick == "m" else Kind.CROSS
            gens.append(Generator(kind, (usable[k], usable[k + 1])))
            k += 2
    if not gens and axis is None:
        return None
    return Layer(tuple(gens), axis, mode)


@st.composite
def chains(draw, mode=None, max_layers=3, source=None):
    mode = draw(MODES) if mode is None else mode
    if source is None:
        left = draw(st.lists(st.integers(1, 2), min_size=1 if mode is PLAIN else 0, max_size=3))
        center = draw(st.sampled_from([0, 2])) if mode is HYPER else 0
        if not left and center == 0:
            center = 2
        while 2 * sum(left) + center > 8:  # keep |I| small
            left.pop()
    else:
        left, center = source
    layers = []
    for _ in range(draw(st.integers(1, max_layers))):
        layer = draw(layers_on(tuple(left), center, mode))
        if layer is None:
            break
        layers.append(layer)
        parts = layer.target.parts
        if mode is HYPER:
            h = len(parts) // 2
            left, center = list(parts[:h]), parts[h]
        else:
            left, center = list(parts), 0
    if not layers:
        layers.append(Layer(tuple(Generator(Kind.ID, (x,)) for x in left), Generator(Kind.AXIS_ID, (center,)) if center else None, mode))
    return Chain(draw(st.integers(-3, 3).filter(bool)), tuple(layers))


def interface_of(obj):
    parts = obj.parts
    if obj.mode is HYPER:
        h = len(parts) // 2
        return list(parts[:h]), parts[h]
    return list(parts), 0
