#include "lifemoments/life_table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

namespace lifemoments {

namespace {

/// Shortest decimal representation of `value` that strtod parses back to
/// the identical double.
std::string shortest_round_trip(double value) {
    char buffer[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) {
            break;
        }
    }
    return buffer;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != ' ' && c != '\t' && c != '\r') {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

LifeTable::LifeTable(int base_age, std::vector<double> survivors)
    : base_age_(base_age), survivors_(std::move(survivors)) {
    if (survivors_.empty()) {
        throw EmptyTable("life table has no entries");
    }
    for (std::size_t idx = 0; idx < survivors_.size(); ++idx) {
        const double l = survivors_[idx];
        if (!std::isfinite(l) || l < 0.0) {
            throw MalformedCsv("survivor count at age " +
                               std::to_string(base_age_ + static_cast<int>(idx)) +
                               " is not a finite non-negative number");
        }
        if (idx > 0 && l > survivors_[idx - 1]) {
            throw NonMonotone("survivor count increases between ages " +
                              std::to_string(base_age_ + static_cast<int>(idx) - 1) +
                              " and " +
                              std::to_string(base_age_ + static_cast<int>(idx)));
        }
    }
    if (survivors_[0] <= 0.0) {
        throw EmptyTable("life table radix must be positive");
    }
}

double LifeTable::survivors_at(int age) const {
    if (!covers(age)) {
        throw OutOfRange("age " + std::to_string(age) + " outside table range [" +
                         std::to_string(base_age_) + ", " +
                         std::to_string(last_age()) + "]");
    }
    return survivors_[static_cast<std::size_t>(age - base_age_)];
}

std::optional<int> LifeTable::terminal_age() const noexcept {
    for (std::size_t idx = 0; idx < survivors_.size(); ++idx) {
        if (survivors_[idx] == 0.0) {
            return base_age_ + static_cast<int>(idx);
        }
    }
    return std::nullopt;
}

double one_year_p(const LifeTable& table, int age) {
    const double l0 = table.survivors_at(age);
    const double l1 = table.survivors_at(age + 1);
    if (l0 == 0.0) {
        throw ZeroExposure("no survivors at age " + std::to_string(age));
    }
    return l1 / l0;
}

double one_year_q(const LifeTable& table, int age) {
    return 1.0 - one_year_p(table, age);
}

double k_year_p(const LifeTable& table, int age, int k) {
    if (k < 0) {
        throw OutOfRange("negative horizon k = " + std::to_string(k));
    }
    const double l0 = table.survivors_at(age);
    const double lk = table.survivors_at(age + k);
    if (l0 == 0.0) {
        throw ZeroExposure("no survivors at age " + std::to_string(age));
    }
    return lk / l0;
}

ProbabilityBundle probability_bundle(const LifeTable& table, int x, int k) {
    if (k < 0) {
        throw OutOfRange("negative year index k = " + std::to_string(k));
    }
    const double lx = table.survivors_at(x);
    const double lk = table.survivors_at(x + k);
    const double lk1 = table.survivors_at(x + k + 1);
    if (lx == 0.0) {
        throw ZeroExposure("no survivors at age " + std::to_string(x));
    }
    ProbabilityBundle bundle{};
    bundle.kpx = lk / lx;
    bundle.p = (lk == 0.0) ? 0.0 : lk1 / lk;
    bundle.q = 1.0 - bundle.p;
    return bundle;
}

LifeTable load_life_table(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) {
        throw MalformedCsv("input is empty, expected header `age,lx`");
    }
    if (strip_spaces(line) != "age,lx") {
        throw MalformedCsv("bad header `" + line + "`, expected `age,lx`");
    }

    bool have_base = false;
    int base_age = 0;
    int expected_age = 0;
    std::vector<double> survivors;

    while (std::getline(source, line)) {
        const std::string row = strip_spaces(line);
        if (row.empty()) {
            continue;
        }
        const std::size_t comma = row.find(',');
        if (comma == std::string::npos) {
            throw MalformedCsv("row `" + line + "` has no comma");
        }
        const std::string age_text = row.substr(0, comma);
        const std::string lx_text = row.substr(comma + 1);

        // std::from_chars rather than std::stod: stod throws out_of_range on
        // subnormal survivor counts, which are representable and must round-trip.
        int age = 0;
        double lx = 0.0;
        const auto age_result = std::from_chars(
            age_text.data(), age_text.data() + age_text.size(), age);
        const auto lx_result = std::from_chars(
            lx_text.data(), lx_text.data() + lx_text.size(), lx);
        if (age_result.ec != std::errc() ||
            age_result.ptr != age_text.data() + age_text.size() ||
            lx_result.ec != std::errc() ||
            lx_result.ptr != lx_text.data() + lx_text.size()) {
            throw MalformedCsv("row `" + line + "` does not parse as age,lx");
        }
        if (!std::isfinite(lx) || lx < 0.0) {
            throw MalformedCsv("row `" + line +
                               "` has a negative or non-finite survivor count");
        }

        if (!have_base) {
            base_age = age;
            expected_age = age;
            have_base = true;
        }
        if (age != expected_age) {
            throw NonConsecutiveAges("expected age " + std::to_string(expected_age) +
                                     ", found " + std::to_string(age));
        }
        ++expected_age;

        if (!survivors.empty() && lx > survivors.back()) {
            throw NonMonotone("survivor count increases between ages " +
                              std::to_string(age - 1) + " and " + std::to_string(age));
        }
        survivors.push_back(lx);
    }

    if (survivors.empty()) {
        throw EmptyTable("no data rows after the header");
    }
    return LifeTable(base_age, std::move(survivors));
}

LifeTable load_life_table_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw MalformedCsv("cannot open life table file `" + path + "`");
    }
    return load_life_table(stream);
}

std::string serialize_life_table(const LifeTable& table) {
    std::ostringstream out;
    out << "age,lx\n";
    for (int age = table.base_age(); age <= table.last_age(); ++age) {
        out << age << ',' << shortest_round_trip(table.survivors_at(age)) << '\n';
    }
    return out.str();
}

} // namespace lifemoments
