#pragma once

#include <cstdint>
#include <string>

#include "semico/io.hpp"

namespace semico::capi {

struct Report {
  io::Json json;
  std::string text;
  bool ok = true;
};

Report validate_report(const io::Input& in);
Report cohomology_report(const MSemimodule& s, unsigned n_lo, unsigned n_hi, std::uint64_t budget);
Report diagram_report(const MSemimodule& s, unsigned n, std::uint64_t budget);
Report classify_report(const MSemimodule& s, bool with_oracle, std::uint64_t budget);
Report completion_report(const io::Input& in);
Report cyclic_report(const CyclicData& d, unsigned n_lo, unsigned n_hi, std::uint64_t budget);
Report separation_report_of(std::int64_t m, unsigned n_lo, unsigned n_hi);

}  // namespace semico::capi
