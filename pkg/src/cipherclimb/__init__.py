"""Worker-parallel hill-climbing cryptanalysis of classical ciphers."""

from .codec import ALPHABET, ALPHABET_SIZE, MappedText, demap, map_text, normalize
from .ngrams import (
    BigramTable,
    DEFAULT_LOG_FLOOR,
    LogBigramTable,
    TABLE_SIZE,
    bigram_index,
    build_log_table,
    build_table_from_corpus,
    format_bigram_file,
    log_score_text,
    parse_bigram_file,
    score_text,
)
from .pairs import PAIR_TOTAL, index_to_pair, pair_count, pair_to_index
from .rng import (
    PIVOT_STREAM,
    WorkerRng,
    init_worker_state,
    pivot_stream_index,
    uniform_to_int,
    worker_stream_index,
)
from .ciphers import (
    apply_letter_swap,
    as_substitution_key,
    as_transposition_key,
    mas_decrypt,
    mas_encrypt,
    sct_decrypt,
    sct_encrypt,
    shift_block,
    swap_block,
    swap_elements,
    transposition_gather_map,
)
from .search import RestartSummary, SolveResult, max_element
from .mas import (
    MasSolverConfig,
    bigram_count_matrix,
    climb,
    deterministic_step,
    solve_deterministic,
    solve_stochastic,
    solve_with_restarts,
    stochastic_worker,
    swap_delta,
    text_swap_delta,
)
from .sct import (
    Operator,
    SctSolverConfig,
    apply_block_shift,
    apply_block_swaps,
    apply_element_swaps,
    sct_worker,
    select_operator,
    solve_sct,
)

__version__ = "0.1.0"
