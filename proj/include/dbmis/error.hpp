#pragma once

#include <stdexcept>
#include <string>

namespace dbmis {

// Coarse error categories; the C API and CLI map these to status/exit codes.
enum class Errc {
  usage,         // bad arguments or malformed request
  parse,         // malformed document or unparsable input
  digit_range,   // a digit or word outside the declared alphabet/diameter
  budget,        // configured node/search budget exceeded
  precondition,  // operation precondition violated by an otherwise valid input
  internal,      // invariant the theory guarantees failed: implementation bug
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Runtime budgets. A single mutable instance; the CLI and C API seed it from
// the BRUIJN_MIS_BUDGET environment variable (which overrides the two node
// budgets when set).
struct Budgets {
  unsigned long long graph_nodes = 1'000'000;  // build_graph node cap
  unsigned long long oracle_nodes = 10'000;    // oracle d^D cap
  int enumerate_max_d = 5;                     // full population expansion
  int perm_bruteforce_max_d = 8;               // stabilizer/transporter/orbit search
};

Budgets& budgets();

}  // namespace dbmis
