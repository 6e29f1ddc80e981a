from specgap.replace.criterion import (
    ReplacementOutcome,
    criterion,
    replacement_outcome,
    split_energy,
)
from specgap.replace.end_block import (
    constant_on_cells,
    end_block_values,
    fit_for_end,
    replace_end_block,
)
from specgap.replace.fits import (
    END_PAIRS,
    FitWitness,
    attachments_in_last_cells,
    check_fit,
    equitable_partitions,
    find_fit_partition,
    end_pair_witnesses,
)
from specgap.replace.formulas import (
    FORMULAS,
    LemmaFormula,
    closed_form_criterion,
    formula,
    lemma_formula,
)
from specgap.replace.lemmas import (
    LEMMA_NAMES,
    LEMMAS,
    ComparisonRow,
    LemmaInstance,
    LemmaReport,
    LemmaSpec,
    LemmaSuiteReport,
    lemma_spec,
    run_comparisons,
    run_lemma,
    run_lemma_experiment,
)
from specgap.replace.splice import (
    carry_vector,
    find_occurrence,
    host_label_values,
    left_neighbour_values,
    locate,
    splice,
)

__all__ = [
    # Fits
    "END_PAIRS",
    "FitWitness",
    "check_fit",
    "attachments_in_last_cells",
    "equitable_partitions",
    "find_fit_partition",
    "end_pair_witnesses",
    # Energy criterion
    "ReplacementOutcome",
    "criterion",
    "split_energy",
    "replacement_outcome",
    # End-block replacement
    "end_block_values",
    "constant_on_cells",
    "fit_for_end",
    "replace_end_block",
    # Closed forms
    "FORMULAS",
    "LemmaFormula",
    "formula",
    "lemma_formula",
    "closed_form_criterion",
    # Gadget splicing
    "locate",
    "splice",
    "find_occurrence",
    "host_label_values",
    "left_neighbour_values",
    "carry_vector",
    # Lemma experiments
    "LEMMAS",
    "LEMMA_NAMES",
    "LemmaSpec",
    "LemmaInstance",
    "LemmaReport",
    "ComparisonRow",
    "LemmaSuiteReport",
    "lemma_spec",
    "run_lemma_experiment",
    "run_comparisons",
    "run_lemma",
]
