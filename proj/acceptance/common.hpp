#pragma once

#include <string>

#include "cubical/driver.hpp"
#include "cubical/nbe.hpp"

namespace acc {

using namespace cubical;

struct Result {
    bool pass = false;
    std::string detail;
};

/// Audits every normal form the suites produce.
struct NfLog {
    long audited = 0;
    long violations = 0;
    std::string first;

    void add(const Cx& cx, const NfPtr& nf);
    void add(const Cx& cx, const NfTyPtr& nf);
};
NfLog& nf_log();

/// Normalizes and records the result for auditing.
NfPtr nf_of(const Cx& cx, const TypePtr& type, const TermPtr& term);
NfTyPtr nf_ty_of(const Cx& cx, const TypePtr& type);

/// The glue sample: identity equivalences on S1 and on S1 -> S1.
const Session& world();
TermPtr id_equiv();

/// Loads `src` on top of the glue sample and compares each pair of
/// declarations by normal form. Every declaration's normal forms are audited.
Result compare_decls(const std::string& src, const std::vector<std::pair<std::string, std::string>>& pairs,
                     const std::string& what);

Result kan_boundaries();      // 1
Result connective_rules();    // 2
Result endpoint_rules();      // 3
Result eta_laws();            // 4
Result idempotence();         // 5
Result determinism(const std::string& self);  // 6
Result cof_oracle();          // 7
Result lambda_oracle();       // 8
Result pi_injectivity();      // 9

/// The corpus of criterion 5, one serialized normal form per line.
std::vector<std::string> corpus_lines();

} // namespace acc
