#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ghzsim/config.hpp"
#include "ghzsim/sweep.hpp"

namespace ghzsim {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// header "tau,topology,p,g,alpha,<measures...>", 12 significant digits,
// UTF-8 with \n line endings
std::string format_csv(const std::vector<sweep_record>& records,
                       const std::vector<std::string>& measures);

// array of objects with the same keys as the CSV columns
std::string format_json(const std::vector<sweep_record>& records,
                        const std::vector<std::string>& measures);

// single line chart, one polyline per measure and parameter group, linear
// labeled axes
std::string format_svg(const std::vector<sweep_record>& records,
                       const std::vector<std::string>& measures);

// renders per cfg.format into cfg.out, or to stdout when cfg.out is empty;
// throws io_error when the path cannot be written
void emit(const std::vector<sweep_record>& records, const run_config& cfg);

}  // namespace ghzsim
