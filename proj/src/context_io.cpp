#include "fcadr/context_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "fcadr/error.hpp"

namespace fcadr {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::vector<std::string_view> split_cells(std::string_view line, char sep) {
  std::vector<std::string_view> cells;
  while (true) {
    auto p = line.find(sep);
    cells.push_back(trim(line.substr(0, p)));
    if (p == std::string_view::npos) break;
    line.remove_prefix(p + 1);
  }
  return cells;
}

bool csv_cell_value(std::string_view token, bool& value) {
  if (token == "1" || token == "x" || token == "X" || token == "\xC3\x97") {
    value = true;
    return true;
  }
  if (token.empty() || token == "0") {
    value = false;
    return true;
  }
  return false;
}

FormalContext parse_csv(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && is_blank(lines[k].text)) ++k;
  if (k == lines.size()) throw ParseError("empty input", 1, 0);

  const Line& header = lines[k++];
  char sep = header.text.find(';') != std::string_view::npos ? ';' : ',';
  if (header.text.find(sep) == std::string_view::npos)
    throw ParseError("header row has no ';' or ',' separator", header.number, 0);

  auto head = split_cells(header.text, sep);
  std::vector<std::string> attributes;
  std::unordered_set<std::string_view> seen;
  for (std::size_t c = 1; c < head.size(); ++c) {
    if (head[c].empty()) throw ParseError("empty attribute label", header.number, c + 1);
    if (!seen.insert(head[c]).second)
      throw ParseError("duplicate attribute label '" + std::string(head[c]) + "'", header.number, c + 1);
    attributes.emplace_back(head[c]);
  }

  std::vector<std::string> objects;
  std::vector<std::vector<bool>> incidence;
  seen.clear();
  for (; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (is_blank(line.text)) continue;
    auto cells = split_cells(line.text, sep);
    if (cells.size() != head.size())
      throw ParseError("row has " + std::to_string(cells.size()) + " cells, header has " + std::to_string(head.size()),
                       line.number, std::min(cells.size(), head.size()) + 1);
    if (cells[0].empty()) throw ParseError("empty object label", line.number, 1);
    if (!seen.insert(cells[0]).second)
      throw ParseError("duplicate object label '" + std::string(cells[0]) + "'", line.number, 1);
    objects.emplace_back(cells[0]);
    std::vector<bool> row(attributes.size());
    for (std::size_t c = 1; c < cells.size(); ++c) {
      bool value = false;
      if (!csv_cell_value(cells[c], value))
        throw ParseError("unknown cell token '" + std::string(cells[c]) + "'", line.number, c + 1);
      row[c - 1] = value;
    }
    incidence.push_back(std::move(row));
  }
  if (objects.empty()) throw ParseError("no object rows", header.number, 0);
  return FormalContext(std::move(objects), std::move(attributes), incidence);
}

class CxtReader {
 public:
  explicit CxtReader(std::string_view text) : lines_(split_lines(text)) {}

  FormalContext read() {
    const Line& magic = next("missing 'B' header");
    if (trim(magic.text) != "B") throw ParseError("expected 'B' header", magic.number, 1);

    // Optional context name line, usually blank.
    skip_blank();
    if (pos_ < lines_.size() && !is_count(lines_[pos_].text)) ++pos_;
    std::size_t n_objects = read_count("object count");
    std::size_t n_attributes = read_count("attribute count");
    if (n_objects == 0 || n_attributes == 0) throw ParseError("object and attribute counts must be positive", last_, 0);
    skip_blank();

    auto objects = read_labels(n_objects, "object");
    auto attributes = read_labels(n_attributes, "attribute");

    std::vector<std::vector<bool>> incidence;
    for (std::size_t x = 0; x < n_objects; ++x) {
      const Line& line = next("missing incidence row");
      auto row = trim(line.text);
      if (row.size() != n_attributes)
        throw ParseError("incidence row has " + std::to_string(row.size()) + " cells, expected " +
                             std::to_string(n_attributes),
                         line.number, std::min(row.size(), n_attributes) + 1);
      std::vector<bool> cells(n_attributes);
      for (std::size_t a = 0; a < n_attributes; ++a) {
        char c = row[a];
        if (c == 'X' || c == 'x')
          cells[a] = true;
        else if (c != '.')
          throw ParseError(std::string("unknown cell token '") + c + "'", line.number, a + 1);
      }
      incidence.push_back(std::move(cells));
    }
    for (; pos_ < lines_.size(); ++pos_)
      if (!is_blank(lines_[pos_].text)) throw ParseError("unexpected content after incidence rows", lines_[pos_].number, 1);
    return FormalContext(std::move(objects), std::move(attributes), incidence);
  }

 private:
  static bool is_count(std::string_view s) {
    s = trim(s);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return !s.empty() && ec == std::errc{} && p == s.data() + s.size();
  }

  const Line& next(const char* missing) {
    if (pos_ >= lines_.size()) throw ParseError(missing, lines_.empty() ? 1 : lines_.back().number + 1, 0);
    last_ = lines_[pos_].number;
    return lines_[pos_++];
  }

  void skip_blank() {
    while (pos_ < lines_.size() && is_blank(lines_[pos_].text)) ++pos_;
  }

  std::size_t read_count(const char* what) {
    skip_blank();
    const Line& line = next((std::string("missing ") + what).c_str());
    if (!is_count(line.text)) throw ParseError(std::string("expected ") + what, line.number, 1);
    auto s = trim(line.text);
    std::size_t v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
  }

  std::vector<std::string> read_labels(std::size_t n, const char* what) {
    std::vector<std::string> labels;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      const Line& line = next((std::string("missing ") + what + " label").c_str());
      std::string label(trim(line.text));
      if (label.empty()) throw ParseError(std::string("empty ") + what + " label", line.number, 1);
      if (!seen.insert(label).second)
        throw ParseError(std::string("duplicate ") + what + " label '" + label + "'", line.number, 1);
      labels.push_back(std::move(label));
    }
    return labels;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 1;
};

void require_plain_label(const std::string& label, std::string_view forbidden) {
  if (label.find_first_of(forbidden) != std::string::npos || trim(label) != label)
    throw InvalidArgument("label '" + label + "' cannot be written in this format");
}

}  // namespace

FormalContext parse_context(std::string_view text, ContextFormat format) {
  switch (format) {
    case ContextFormat::csv: return parse_csv(text);
    case ContextFormat::burmeister: return CxtReader(text).read();
  }
  throw InvalidArgument("unknown context format");
}

std::string serialize_context(const FormalContext& ctx, ContextFormat format) {
  std::ostringstream out;
  if (format == ContextFormat::csv) {
    for (const auto& a : ctx.attributes()) {
      require_plain_label(a, ";,\r\n");
      out << ';' << a;
    }
    out << '\n';
    for (std::size_t x = 0; x < ctx.object_count(); ++x) {
      require_plain_label(ctx.objects()[x], ";,\r\n");
      out << ctx.objects()[x];
      for (std::size_t a = 0; a < ctx.attribute_count(); ++a) out << ';' << (ctx.incidence(x, a) ? '1' : '0');
      out << '\n';
    }
    return out.str();
  }
  out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
  for (const auto& o : ctx.objects()) {
    require_plain_label(o, "\r\n");
    out << o << '\n';
  }
  for (const auto& a : ctx.attributes()) {
    require_plain_label(a, "\r\n");
    out << a << '\n';
  }
  for (std::size_t x = 0; x < ctx.object_count(); ++x) {
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) out << (ctx.incidence(x, a) ? 'X' : '.');
    out << '\n';
  }
  return out.str();
}

FormalDecisionContext parse_decision_context(std::string_view text, std::span<const std::string> decision_labels,
                                             ContextFormat format) {
  return split_decision_context(parse_context(text, format), decision_labels);
}

ContextFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".cxt" ? ContextFormat::burmeister : ContextFormat::csv;
}

FormalContext load_context(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_context(buf.str(), format_for_path(path));
}

}  // namespace fcadr
