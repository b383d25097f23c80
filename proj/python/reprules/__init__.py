from ._reprules import (
    Dataset,
    DomainError,
    EmptyDatasetError,
    InputError,
    ParameterError,
    PreconditionError,
    Table,
    deg_sim,
    gain,
    mine,
    normalize,
    rar,
    representative_oracle,
    skyline,
    synthesize,
    table_from_values,
    tb_rules,
    thresholds_from_rr,
)
