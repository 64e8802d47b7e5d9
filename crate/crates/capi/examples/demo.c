#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "immanant.h"

int main(void) {
    assert(strcmp(imm_version(), "0.1.0") == 0);

    ImmTable *table = NULL;
    assert(imm_table_new(4, &table) == IMM_STATUS_OK);

    size_t partition[] = {2, 2};
    size_t class_[] = {1, 1, 1, 1};
    int64_t chi = 0;
    assert(imm_character(table, partition, 2, class_, 4, &chi) == IMM_STATUS_OK);
    assert(chi == 2);

    uint64_t dim = 0;
    assert(imm_dimension(partition, 2, &dim) == IMM_STATUS_OK);
    assert(dim == 2);

    char *value = NULL;
    const char *json = "[[1,1,1,1],[1,1,1,1],[1,1,1,1],[1,1,1,1]]";
    size_t row[] = {4};
    assert(imm_immanant_json(table, row, 1, json, &value) == IMM_STATUS_OK);
    assert(strcmp(value, "24") == 0);
    imm_string_free(value);

    size_t rank = 0;
    assert(imm_perm_span_rank(4, &rank) == IMM_STATUS_OK && rank == 10);

    size_t order = 0;
    size_t middle[] = {2, 1, 1};
    assert(imm_gset_order(table, middle, 3, &order) == IMM_STATUS_OK);
    printf("gset order of (2,1,1) at n=4: %zu\n", order);
    assert(order == 4);

    imm_table_free(table);
    puts("C ABI smoke test passed");
    return 0;
}
