/**
 * @file cli.hpp
 * @brief Command-line front end. Subcommands: validate, order, orbits,
 *        irreps, chartable, galois-classes, rational-count, wedderburn,
 *        rational-rep, verify, sweep, compare. Output as text or JSON
 *        (schema_version "1").
 *
 * Exit codes: 0 success, 1 validation error (including size-bound
 * rejections), 2 verification mismatch, 64 usage error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metaq {

struct Decomposition;

/// Renders a decomposition in the conventional display form: fields named
/// Q(z{p^lambda}), conductor <= 2 printed as Q, components joined by " + ".
std::string decomposition_to_text(const Decomposition& d);

namespace cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace cli
}  // namespace metaq
