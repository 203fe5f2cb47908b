/* The public header must compile as C. */
#include "lvf/lvf.h"

int main(void) {
  lvf_report* r = 0;
  const lvf_status s = lvf_indicial("223", &r);
  const int ok = s == LVF_OK && lvf_report_all_pass(r);
  lvf_report_free(r);
  return ok ? 0 : 1;
}
