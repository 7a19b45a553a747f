// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "conelift/parse.hpp"
#include "conelift/rational_function.hpp"

namespace conelift {

struct JobLine {
  std::string text;
  int line_no;
};

// Line-oriented sectioned text: a `[name]` header starts a section, every
// following nonempty line belongs to it. `#` starts a comment anywhere on a
// line. Repeated sections append. Content before the first header is an
// error.
class JobFile {
 public:
  static JobFile parse(const std::string& content) {
    JobFile job;
    std::istringstream in(content);
    std::string raw;
    int line_no = 0;
    std::string current;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string line = raw;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);

      if (line.front() == '[') {
        if (line.back() != ']')
          throw ParseError("unterminated section header", line_no, static_cast<int>(first) + 1);
        current = line.substr(1, line.size() - 2);
        if (current.empty())
          throw ParseError("empty section name", line_no, static_cast<int>(first) + 1);
        if (!job.sections_.count(current)) job.order_.push_back(current);
        job.sections_[current];  // section may stay empty
        continue;
      }
      if (current.empty())
        throw ParseError("content before any [section] header", line_no,
                         static_cast<int>(first) + 1);
      job.sections_[current].push_back({line, line_no});
    }
    return job;
  }

  static JobFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open job file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  bool has(const std::string& name) const { return sections_.count(name) > 0; }

  const std::vector<JobLine>& section(const std::string& name) const {
    static const std::vector<JobLine> empty;
    const auto it = sections_.find(name);
    return it == sections_.end() ? empty : it->second;
  }

  const std::vector<std::string>& section_names() const { return order_; }

 private:
  std::map<std::string, std::vector<JobLine>> sections_;
  std::vector<std::string> order_;
};

// [vars]-style section: identifiers possibly spread over several lines.
inline VarSet job_vars(const JobFile& job, const std::string& name) {
  const auto& lines = job.section(name);
  if (lines.empty()) throw ParseError("missing or empty [" + name + "] section", 1, 1);
  std::string joined;
  for (const JobLine& l : lines) joined += l.text + " ";
  try {
    return parse_variables(joined, lines.front().line_no);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in [" + name + "]", e.line, e.column);
  }
}

inline std::vector<Polynomial> job_polynomials(const JobFile& job, const std::string& name,
                                               const VarSet& vars,
                                               MonomialOrder order = MonomialOrder::Grevlex) {
  std::vector<Polynomial> out;
  for (const JobLine& l : job.section(name))
    out.push_back(parse_polynomial(l.text, vars, order, l.line_no));
  return out;
}

inline std::vector<RationalFunction> job_rational_functions(
    const JobFile& job, const std::string& name, const VarSet& vars,
    MonomialOrder order = MonomialOrder::Grevlex) {
  std::vector<RationalFunction> out;
  for (const JobLine& l : job.section(name))
    out.push_back(parse_rational_function(l.text, vars, order, l.line_no));
  return out;
}

inline std::vector<std::vector<Rational>> job_points(const JobFile& job,
                                                     const std::string& name) {
  std::vector<std::vector<Rational>> out;
  for (const JobLine& l : job.section(name))
    out.push_back(parse_rational_tuple(l.text, l.line_no));
  return out;
}

}  // namespace conelift
