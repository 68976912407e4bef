"""hypothesis strategies for small link diagrams"""

import typing

import hypothesis.strategies as st

import conway_skein.diagram.base as csdb
import conway_skein.diagram.faces as csdf
import conway_skein.diagram.moves as csdm
import conway_skein.diagram.parse as csdp
import conway_skein.typing as cst

Walk = typing.Tuple[csdb.Diagram, csdb.Diagram, typing.List[str]]


@st.composite
def braid_words(
    draw: typing.Callable[[st.SearchStrategy], typing.Any],
    max_strands: int = 4,
    max_letters: int = 12,
) -> str:
    strands = draw(st.integers(min_value=2, max_value=max_strands))
    alphabet = [s * i for i in range(1, strands) for s in (1, -1)]
    letter = st.sampled_from(alphabet)
    letters = draw(st.lists(letter, min_size=1, max_size=max_letters))
    return f"{strands}: " + " ".join(str(x) for x in letters)


def braid_closures(
    max_strands: int = 4, max_letters: int = 12
) -> st.SearchStrategy:
    words = braid_words(max_strands=max_strands, max_letters=max_letters)
    return words.map(lambda w: csdp.close_braid(csdp.parse_braid(w)))


def with_crossing(diagrams: st.SearchStrategy) -> st.SearchStrategy:
    """(diagram, crossing index) pairs"""

    def pick(d: csdb.Diagram) -> st.SearchStrategy:
        index = st.integers(min_value=0, max_value=d.crossing_count - 1)
        return st.tuples(st.just(d), index)

    return diagrams.filter(lambda d: d.crossing_count > 0).flatmap(pick)


def outer_edge(d: csdb.Diagram) -> typing.Optional[int]:
    """least edge on the outer face of the first piece, None without crossings"""
    if not d.pieces:
        return None
    piece = d.pieces[0]
    outer = csdf.outer_face(d, piece)
    return min(
        label
        for label, sides in csdf.edge_faces(d).items()
        if outer in sides and d.heads[label].crossing in piece
    )


@st.composite
def reidemeister_walks(
    draw: typing.Callable[[st.SearchStrategy], typing.Any],
    diagrams: st.SearchStrategy,
    moves: int = 20,
    slack: int = 4,
) -> Walk:
    """a diagram, the result of random R1/R2/R3 moves on it, and the move kinds

    Moves that add crossings are only drawn while the diagram stays within
    ``slack`` crossings of where it started.
    """
    start = draw(diagrams)
    cap = start.crossing_count + slack
    d = start
    kinds: typing.List[str] = []
    for _ in range(moves):
        kinks = csdm.r1_sites(d)
        bigons = csdm.r2_sites(d)
        triangles = csdm.r3_faces(d)
        fingers = csdm.r2_add_sites(d) if d.crossing_count + 2 <= cap else []
        available = [
            kind
            for kind, ok in (
                ("r1", d.crossing_count < cap and bool(d.ends)),
                ("r2", bool(fingers)),
                ("r3", bool(triangles)),
                ("r1-remove", bool(kinks)),
                ("r2-remove", bool(bigons)),
            )
            if ok
        ]
        if not available:
            break
        kind = draw(st.sampled_from(available))
        if kind == "r1":
            edge = draw(st.sampled_from(sorted(d.ends)))
            side = draw(st.sampled_from(list(cst.Side)))
            sign = draw(st.sampled_from((1, -1)))
            d = csdm.apply_r1_add(d, edge, side, sign)
        elif kind == "r2":
            over, under, face = draw(st.sampled_from(fingers))
            d = csdm.apply_r2_add(d, over, under, face=face)
        elif kind == "r3":
            d = csdm.apply_r3(d, draw(st.sampled_from(triangles)))
        elif kind == "r1-remove":
            d = csdm.apply_r1_remove(d, draw(st.sampled_from(kinks)))
        else:
            c1, c2 = draw(st.sampled_from(bigons))
            d = csdm.apply_r2_remove(d, c1, c2)
        kinds.append(kind)
    return start, d, kinds
