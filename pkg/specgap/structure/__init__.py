from specgap.structure.fiedler import (
    FiedlerStructureReport,
    exceptional_cells,
    fiedler_structure,
    is_palindromic,
    mirror_map,
    structural_partition,
    structure_status,
)
from specgap.structure.partition import (
    Partition,
    cell_edge_counts,
    coarsest_equitable,
    is_equitable,
    make_partition,
    neighbour_counts,
    partition_from_colors,
    refine_colors,
)

__all__ = [
    # Partitions
    "Partition",
    "make_partition",
    "is_equitable",
    "neighbour_counts",
    "cell_edge_counts",
    "refine_colors",
    "partition_from_colors",
    "coarsest_equitable",
    # Fiedler structure
    "FiedlerStructureReport",
    "fiedler_structure",
    "structure_status",
    "structural_partition",
    "exceptional_cells",
    "is_palindromic",
    "mirror_map",
]
