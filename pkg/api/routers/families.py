from typing import List, Literal, Union

from fastapi import APIRouter, Query
from fastapi.responses import PlainTextResponse

from api.errors import http_error
from api.models import BlockResponse, GraphResponse
from specgap.blocks.assembly import Assembly
from specgap.blocks.catalog import block, catalog_tags
from specgap.blocks.families import build_G_n, build_H
from specgap.domain.formats import to_graph6

router = APIRouter()


def _graph_response(a: Assembly) -> GraphResponse:
    return GraphResponse(
        n=a.n,
        edges=[[u, v] for u, v in a.graph.edges],
        graph6=to_graph6(a.graph),
        blocks=a.tags,
    )


def _render(a: Assembly, format: str) -> Union[GraphResponse, PlainTextResponse]:
    if format == "graph6":
        return PlainTextResponse(to_graph6(a.graph) + "\n")
    return _graph_response(a)


@router.get("/families/gn/{n}", response_model=None)
def get_gn(
    n: int,
    format: Literal["json", "graph6"] = Query("json", description="Output format"),
):
    """The graph G_n."""
    try:
        return _render(build_G_n(n), format)
    except Exception as e:
        raise http_error(e, "building G_n")


@router.get("/families/h", response_model=None)
def get_h(
    m: int = Query(..., ge=0, description="Number of middle blocks"),
    i: int = Query(..., description="Left end block index"),
    j: int = Query(..., description="Right end block index"),
    format: Literal["json", "graph6"] = Query("json", description="Output format"),
):
    """The graph H_{i,j}(m)."""
    try:
        return _render(build_H(m, i, j), format)
    except Exception as e:
        raise http_error(e, "building H")


@router.get("/families/blocks", response_model=List[str])
def get_block_tags():
    return catalog_tags()


@router.get("/families/blocks/{tag}", response_model=BlockResponse)
def get_block(tag: str):
    """A catalog block with its ports and structural cells."""
    try:
        b = block(tag)
    except Exception as e:
        raise http_error(e, "fetching block")
    return BlockResponse(
        tag=b.tag,
        kind=str(b.kind),
        labels=list(b.labels),
        n=b.order,
        edges=[[u, v] for u, v in b.graph.edges],
        left_port=list(b.left_port),
        right_port=list(b.right_port),
        cells=[list(c) for c in b.cells],
        symmetric=b.symmetric,
    )
