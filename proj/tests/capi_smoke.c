/* Exercises the C API from C: handles, strings and error codes. */
#include <stdio.h>
#include <string.h>

#include "sl3web/sl3web.h"

static int failed = 0;

#define EXPECT(cond)                                     \
  do {                                                   \
    if (!(cond)) {                                       \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      failed = 1;                                        \
    }                                                    \
  } while (0)

int main(void) {
  sl3web_web* w = NULL;
  sl3web_combo* c = NULL;
  char* s = NULL;
  size_t n = 0;
  uint64_t d = 0;
  int flag = -1;

  EXPECT(sl3web_web_corpus("hexW", &w) == SL3WEB_OK);
  EXPECT(sl3web_web_signature(w, &s) == SL3WEB_OK);
  EXPECT(s && strlen(s) == 6);
  sl3web_string_free(s);
  EXPECT(sl3web_web_is_non_elliptic(w, &flag) == SL3WEB_OK && flag == 1);

  EXPECT(sl3web_reduce(w, 1, 7, NULL, NULL, &c) == SL3WEB_OK);
  EXPECT(sl3web_combo_size(c, &n) == SL3WEB_OK && n == 1);
  sl3web_combo_free(c);

  EXPECT(sl3web_coefficient(w, "1,1,1,-1,-1,-1", &s) == SL3WEB_OK || sl3web_last_error()[0]);
  sl3web_string_free(s);
  s = NULL;
  EXPECT(sl3web_dominant_path(w, &s) == SL3WEB_OK);
  sl3web_string_free(s);
  s = NULL;
  EXPECT(sl3web_canon_check(w, NULL, &s) == SL3WEB_OK && strstr(s, "dual_canonical"));
  sl3web_string_free(s);
  sl3web_web_free(w);

  EXPECT(sl3web_dim("wbwbwb", &d) == SL3WEB_OK && d == 6);
  EXPECT(sl3web_dim("wbq", &d) == SL3WEB_ERR_INPUT);
  EXPECT(strlen(sl3web_last_error()) > 0);
  w = NULL;
  EXPECT(sl3web_web_from_json("{\"not\": \"a web\"}", &w) == SL3WEB_ERR_INPUT && w == NULL);
  EXPECT(sl3web_web_corpus("nope", &w) == SL3WEB_ERR_INPUT);
  EXPECT(sl3web_web_signature(NULL, &s) == SL3WEB_ERR_NULL);

  puts(failed ? "FAIL" : "PASS");
  return failed;
}
