#include <stdio.h>
#include <string.h>

#include "homdens.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__,     \
              __LINE__, #cond);                                  \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  HdGraph *k4 = hd_graph_complete(4);
  HdGraph *k5 = hd_graph_complete(5);
  char *num = NULL;
  char *den = NULL;
  CHECK(hd_density(k4, k5, &num, &den) == HD_STATUS_OK);
  CHECK(strcmp(num, "24") == 0 && strcmp(den, "125") == 0);
  hd_string_free(num);
  hd_string_free(den);

  char *hom = NULL;
  HdFastPath path;
  CHECK(hd_count_homomorphisms(k4, k5, 2, &hom, &path) == HD_STATUS_OK);
  CHECK(strcmp(hom, "120") == 0 && path == HD_FAST_PATH_COMPLETE_DOMAIN);
  hd_string_free(hom);

  HdGraph *bad = NULL;
  CHECK(hd_graph_from_graph6("B", &bad) == HD_STATUS_PARSE_ERROR);
  CHECK(bad == NULL && hd_last_error_message() != NULL);

  const uint32_t edges[] = {0, 1, 1, 2, 2, 0};
  HdGraph *tri = NULL;
  CHECK(hd_graph_new(3, edges, 3, &tri) == HD_STATUS_OK);
  char *g6 = NULL;
  CHECK(hd_graph_to_graph6(tri, &g6) == HD_STATUS_OK);
  CHECK(strcmp(g6, "Bw") == 0);
  hd_string_free(g6);

  hd_graph_free(tri);
  hd_graph_free(k4);
  hd_graph_free(k5);
  puts("ok");
  return 0;
}
