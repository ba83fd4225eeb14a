#pragma once

#include <string>
#include <vector>

namespace ghzsim {

struct check_result {
    std::string name;    // check family
    std::string detail;  // what was compared
    double deviation = 0.0;
    double limit = 0.0;
    bool pass = false;
    bool fatal = true;  // non-fatal rows record known plot-read discrepancies
};

struct validate_report {
    std::vector<check_result> checks;
    bool ok() const;
};

// runs the full self-check suite: beta oracle grid, three-engine agreement,
// fixture blocks, saturation levels, and reported table rows; inject_fault
// may name a check family ("beta_closed") to perturb deliberately
validate_report run_validate(const std::string& inject_fault = "");

std::string report_text(const validate_report& rep);
std::string report_json(const validate_report& rep);

// table rows as CSV: quantity,topology,reported,derived,deviation,verdict
std::string fixture_csv();

}  // namespace ghzsim
