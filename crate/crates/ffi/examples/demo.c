/* Minimal C consumer of the antidim C ABI.
 *
 * Build after `cargo build --workspace --release`:
 *   cc -std=c11 -I crates/ffi/include crates/ffi/examples/demo.c \
 *      target/release/libantidim_ffi.a -lpthread -lm -ldl -o demo
 */
#include <inttypes.h>
#include <stdio.h>

#include "antidim.h"

int main(void) {
    AntidimGraph *g = NULL;
    AntidimStatus st = antidim_graph_from_family(ANTIDIM_FAMILY_TORUS, 5, 5, &g);
    if (st != ANTIDIM_STATUS_OK) {
        fprintf(stderr, "build failed: %s\n", antidim_last_error_message());
        return 1;
    }
    printf("torus 5x5: %" PRIu64 " vertices, %" PRIu64 " edges\n",
           antidim_graph_vertex_count(g), antidim_graph_edge_count(g));

    uint64_t witness[25];
    AntidimSolveResult result;
    st = antidim_solve(g, 2, ANTIDIM_SEMANTICS_EXACT, 25, 0, witness, 25, &result);
    if (st != ANTIDIM_STATUS_OK) {
        fprintf(stderr, "solve failed: %s\n", antidim_last_error_message());
        antidim_graph_free(g);
        return 1;
    }
    if (result.state == ANTIDIM_SOLVE_STATE_OPTIMAL) {
        printf("adim_2 = %" PRIu64 ", witness:", result.cardinality);
        for (uint64_t i = 0; i < result.witness_len; i++) {
            printf(" %" PRIu64, witness[i]);
        }
        printf("\n");
    }

    uint64_t kappa = 0;
    bool exact = false;
    antidim_kappa(g, ANTIDIM_UNBOUNDED, &kappa, &exact);
    printf("kappa = %" PRIu64 " (%s)\n", kappa, exact ? "exact" : "lower bound");

    antidim_graph_free(g);
    return 0;
}
