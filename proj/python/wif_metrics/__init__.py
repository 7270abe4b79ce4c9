"""Journal impact-factor variants: classic, normalized, weighted and the
five-year-weighted proposal, plus ranking and correlation helpers."""

from ._core import (
    Dataset,
    IndicatorTable,
    WifError,
    buela_casal_wif,
    citing_if_mean,
    citing_if_median,
    classic_if,
    compute_table,
    hy_quotient,
    hy_weight,
    hy_wif,
    indicators,
    load_dataset,
    load_dataset_json,
    logistic_example,
    mif_reference_point,
    mifcj,
    nif,
    paper_fixture,
    pearson,
    pearson_matrix,
    proposed_wif,
    rank_column,
    read_table_csv,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
