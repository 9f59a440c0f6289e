#include "vrpmtw/instance_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "vrpmtw/text.h"

namespace vrpmtw {

InputError::InputError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string raw(text.substr(begin, end - begin));
    for (auto& c : raw) {
      if (c == '[' || c == ']' || c == ',' || c == '\r' || c == '\t') {
        c = ' ';
      }
    }
    std::istringstream in(raw);
    Line line{number, {}};
    for (std::string token; in >> token;) {
      line.tokens.push_back(std::move(token));
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    begin = end + 1;
  }
  return lines;
}

double to_number(const std::string& token, std::size_t line) {
  double value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (first != last && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InputError(line, "expected a number, found '" + token + "'");
  }
  return value;
}

bool is_numeric_row(const Line& line) {
  double value = 0;
  const auto& t = line.tokens.front();
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  return ec == std::errc() && ptr == t.data() + t.size();
}

void finish_windows(Visit& visit, std::size_t line) {
  for (const auto& w : visit.windows) {
    if (w.lower > w.upper) {
      throw InputError(line, "window lower bound exceeds upper bound");
    }
  }
  std::sort(visit.windows.begin(), visit.windows.end(),
            [](const TimeWindow& a, const TimeWindow& b) { return a.lower < b.lower; });
  if (!windows_well_formed(visit.windows)) {
    throw InputError(line, "overlapping time windows");
  }
}

void check_row_values(const Visit& visit, std::size_t line) {
  if (visit.demand < 0) {
    throw InputError(line, "negative demand");
  }
  if (visit.service < 0) {
    throw InputError(line, "negative service time");
  }
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }
  const Line& peek() const { return lines_[next_]; }
  const Line& take(const char* what) {
    if (done()) {
      throw InputError(last_line() + 1, std::string("unexpected end of document, expected ") + what);
    }
    return lines_[next_++];
  }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

void expect_keyword(const Line& line, const char* keyword) {
  if (line.tokens.front() != keyword) {
    throw InputError(line.number, std::string("expected '") + keyword + "'");
  }
}

// Parses "NUMBER CAPACITY" + values; returns the capacity.
double parse_vehicle_section(Cursor& cursor) {
  const auto& titles = cursor.take("vehicle section titles");
  if (is_numeric_row(titles)) {
    throw InputError(titles.number, "expected vehicle column titles");
  }
  const auto& values = cursor.take("vehicle count and capacity");
  if (values.tokens.size() != 2) {
    throw InputError(values.number, "expected '<count> <capacity>'");
  }
  to_number(values.tokens[0], values.number);
  const double capacity = to_number(values.tokens[1], values.number);
  if (capacity < 0) {
    throw InputError(values.number, "negative capacity");
  }
  return capacity;
}

void skip_titles(Cursor& cursor) {
  while (!cursor.done() && !is_numeric_row(cursor.peek())) {
    cursor.take("column titles");
  }
}

Instance parse_extended(Cursor& cursor, const Line& header) {
  if (header.tokens.size() != 3 || header.tokens[1] != "1") {
    throw InputError(header.number, "malformed header, expected 'VRPMTW 1 <precision>'");
  }
  Instance instance;
  const double precision = to_number(header.tokens[2], header.number);
  if (precision != std::floor(precision) || precision < -1 || precision > 15) {
    throw InputError(header.number, "precision must be an integer in [-1, 15]");
  }
  instance.precision = static_cast<int>(precision);

  const auto& name = cursor.take("instance name");
  instance.name = join(name.tokens, " ");

  std::optional<double> deadline;
  std::optional<double> vehicle_cost;
  for (;;) {
    const auto& line = cursor.take("VEHICLE section");
    const auto& key = line.tokens.front();
    if (key == "VEHICLE") {
      break;
    }
    if (line.tokens.size() != 2) {
      throw InputError(line.number, "expected '<KEYWORD> <value>' or 'VEHICLE'");
    }
    const double value = to_number(line.tokens[1], line.number);
    if (key == "DEADLINE") {
      deadline = value;
    } else if (key == "VEHICLE_COST") {
      vehicle_cost = value;
    } else if (key == "MINIMISE_TIME") {
      if (value != 0 && value != 1) {
        throw InputError(line.number, "MINIMISE_TIME must be 0 or 1");
      }
      instance.minimise_time = value == 1;
    } else {
      throw InputError(line.number, "unknown keyword '" + key + "'");
    }
  }
  instance.capacity = parse_vehicle_section(cursor);
  expect_keyword(cursor.take("CUSTOMER section"), "CUSTOMER");
  skip_titles(cursor);

  while (!cursor.done()) {
    const auto& row = cursor.take("customer row");
    const auto& t = row.tokens;
    if (t.size() < 6) {
      throw InputError(row.number, "customer row needs at least 6 fields");
    }
    Visit visit;
    visit.id = static_cast<int>(to_number(t[0], row.number));
    visit.x = to_number(t[1], row.number);
    visit.y = to_number(t[2], row.number);
    visit.demand = to_number(t[3], row.number);
    visit.service = to_number(t[4], row.number);
    const double count = to_number(t[5], row.number);
    if (count < 1 || count != std::floor(count)) {
      throw InputError(row.number, "window count must be a positive integer");
    }
    if (t.size() != 6 + 2 * static_cast<std::size_t>(count)) {
      throw InputError(row.number, "window count does not match the number of bounds");
    }
    for (std::size_t p = 0; p < static_cast<std::size_t>(count); ++p) {
      visit.windows.push_back({to_number(t[6 + 2 * p], row.number), to_number(t[7 + 2 * p], row.number)});
    }
    check_row_values(visit, row.number);
    finish_windows(visit, row.number);
    if (instance.nodes.empty() && visit.windows.size() != 1) {
      throw InputError(row.number, "depot row must have exactly one window");
    }
    instance.nodes.push_back(std::move(visit));
  }
  if (instance.nodes.empty()) {
    throw InputError(cursor.last_line(), "no depot row");
  }
  instance.deadline = deadline.value_or(instance.horizon().upper);
  instance.vehicle_cost = vehicle_cost.value_or(instance.capacity);
  return instance;
}

Instance parse_solomon(Cursor& cursor, const Line& name) {
  Instance instance;
  instance.name = join(name.tokens, " ");
  expect_keyword(cursor.take("VEHICLE section"), "VEHICLE");
  instance.capacity = parse_vehicle_section(cursor);
  expect_keyword(cursor.take("CUSTOMER section"), "CUSTOMER");
  skip_titles(cursor);
  while (!cursor.done()) {
    const auto& row = cursor.take("customer row");
    const auto& t = row.tokens;
    if (t.size() != 7) {
      throw InputError(row.number, "Solomon customer row needs 7 fields");
    }
    Visit visit;
    visit.id = static_cast<int>(to_number(t[0], row.number));
    visit.x = to_number(t[1], row.number);
    visit.y = to_number(t[2], row.number);
    visit.demand = to_number(t[3], row.number);
    visit.windows.push_back({to_number(t[4], row.number), to_number(t[5], row.number)});
    visit.service = to_number(t[6], row.number);
    check_row_values(visit, row.number);
    finish_windows(visit, row.number);
    instance.nodes.push_back(std::move(visit));
  }
  if (instance.nodes.empty()) {
    throw InputError(cursor.last_line(), "no depot row");
  }
  instance.deadline = instance.horizon().upper;
  instance.vehicle_cost = instance.capacity;
  return instance;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Cursor cursor(tokenize(text));
  const auto& first = cursor.take("header");
  Instance instance = first.tokens.front() == "VRPMTW" ? parse_extended(cursor, first)
                                                       : parse_solomon(cursor, first);
  // The depot never has service time.
  instance.nodes.front().service = 0;
  instance.nodes.front().demand = 0;
  compute_euclidean_travel(instance);
  return instance;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open instance file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto instance = parse_instance(buffer.str());
  if (instance.name.empty()) {
    instance.name = path;
  }
  return instance;
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  out << "VRPMTW 1 " << instance.precision << '\n';
  out << instance.name << '\n';
  if (instance.deadline != instance.horizon().upper) {
    out << "DEADLINE " << format_number(instance.deadline) << '\n';
  }
  if (instance.vehicle_cost != instance.capacity) {
    out << "VEHICLE_COST " << format_number(instance.vehicle_cost) << '\n';
  }
  if (instance.minimise_time) {
    out << "MINIMISE_TIME 1\n";
  }
  out << "VEHICLE\nNUMBER CAPACITY\n" << instance.num_visits() << ' '
      << format_number(instance.capacity) << "\nCUSTOMER\n";
  out << "CUST_NO XCOORD YCOORD DEMAND SERVICE WINDOWS\n";
  for (const auto& v : instance.nodes) {
    out << v.id << ' ' << format_number(v.x) << ' ' << format_number(v.y) << ' '
        << format_number(v.demand) << ' ' << format_number(v.service) << ' ' << v.windows.size();
    for (const auto& w : v.windows) {
      out << " [" << format_number(w.lower) << ',' << format_number(w.upper) << ']';
    }
    out << '\n';
  }
  return out.str();
}

Instance perturb_instance(const Instance& instance, std::uint64_t seed) {
  Instance result = instance;
  std::vector<std::vector<TimeWindow>> sets;
  sets.reserve(instance.num_visits());
  for (std::size_t i = 1; i < instance.num_nodes(); ++i) {
    sets.push_back(instance.nodes[i].windows);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(sets.begin(), sets.end(), rng);
  for (std::size_t i = 1; i < result.num_nodes(); ++i) {
    result.nodes[i].windows = std::move(sets[i - 1]);
  }
  return result;
}

}  // namespace vrpmtw
