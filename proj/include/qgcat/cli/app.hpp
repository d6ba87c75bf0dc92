#pragma once

#include "qgcat/error.hpp"
#include "qgcat/lie/lie_type.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgcat::cli {

enum class Format { json, csv, table };

struct JobConfig {
    lie::LieType type{lie::Family::A, 1};
    int ell = 0;
    int ell_last = 0; // equal to ell unless a range a..b was given
    int z = 1;
    bool all_z = false;
    Format format = Format::table;
    int digits = 12;
    bool large = false;
    std::uint64_t weyl_limit = 0;
    bool sub = false;
    bool cross_check = false;
};

namespace exit_status {
inline constexpr int ok = 0;
inline constexpr int io = 1;
inline constexpr int argument = 2;
inline constexpr int level = 3;
inline constexpr int capacity = 4;
inline constexpr int invariant = 5;
inline constexpr int discordance = 6;
} // namespace exit_status

int exit_status_for(ErrorKind kind);

// A computed result disagreeing with a route or prediction it is checked against.
class Discordance : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// "7" or "9..19"; ArgumentError otherwise.
std::pair<int, int> parse_level_range(const std::string& text);

// Each command writes its result to out and returns an exit status.
int cmd_alcove(const JobConfig& cfg, std::ostream& out);
int cmd_smatrix(const JobConfig& cfg, std::ostream& out);
int cmd_verdict(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rank(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_category(const JobConfig& cfg, std::ostream& out);

// Full command line: parses argv, dispatches, maps failures onto exit statuses.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qgcat::cli
