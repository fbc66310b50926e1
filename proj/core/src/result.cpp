#include "delcode/result.hpp"

namespace delcode {

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::ok:
      return "ok";
    case DecodeStatus::no_placement:
      return "no_placement";
    case DecodeStatus::inconsistent_bundle:
      return "inconsistent_bundle";
    case DecodeStatus::regularity_violation:
      return "regularity_violation";
    case DecodeStatus::bad_input:
      return "bad_input";
  }
  return "unknown";
}

}  // namespace delcode
