/* Compiled as C: the header must stay C-clean. */
#include <stdio.h>
#include <string.h>

#include "aksch/aksch.h"

int main(void) {
  aksch_context* ctx = NULL;
  aksch_params* p = NULL;
  aksch_verdict_kind kind;
  const long f[2] = {0, 1};
  int rc = 0;
  if (aksch_context_new(&ctx) != AKSCH_OK) return 1;
  if (aksch_params_new(ctx, 5, f, 2, 0, &p) != AKSCH_OK) rc = 1;
  if (!rc && aksch_classify_kind(ctx, 2, p, &kind) != AKSCH_OK) rc = 1;
  if (!rc && kind != AKSCH_FINITE) rc = 1;
  if (strlen(aksch_version()) == 0) rc = 1;
  aksch_params_free(p);
  aksch_context_free(ctx);
  printf("%s\n", rc ? "c header check failed" : "c header check ok");
  return rc;
}
