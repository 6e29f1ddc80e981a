from specgap.blocks.assembly import (
    Assembly,
    assemble,
    block_sequence,
    glue,
    identify_block,
)
from specgap.blocks.catalog import (
    Block,
    attachment_degrees_ok,
    block,
    catalog_tags,
    mirror,
    mirror_tag,
)
from specgap.blocks.families import (
    G_N_END_PAIRS,
    build_family,
    build_G_n,
    build_H,
    g_n_sequence,
    h_order,
    h_sequence,
)
from specgap.blocks.gadgets import (
    COMPARISON_BLOCKS,
    PAIR_NAMES,
    Gadget,
    GadgetPair,
    gadget,
    gadget_pair,
)
from specgap.blocks.long_blocks import build_long_block

__all__ = [
    # Catalog
    "Block",
    "block",
    "mirror",
    "mirror_tag",
    "catalog_tags",
    "attachment_degrees_ok",
    # Assembly
    "Assembly",
    "assemble",
    "glue",
    "block_sequence",
    "identify_block",
    "build_long_block",
    # Families
    "G_N_END_PAIRS",
    "build_G_n",
    "build_H",
    "build_family",
    "g_n_sequence",
    "h_sequence",
    "h_order",
    # Gadgets
    "Gadget",
    "GadgetPair",
    "gadget",
    "gadget_pair",
    "PAIR_NAMES",
    "COMPARISON_BLOCKS",
]
