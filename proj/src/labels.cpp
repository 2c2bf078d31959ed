#include "exbraid/labels.hpp"

#include <cctype>
#include <map>
#include <regex>

#include "exbraid/error.hpp"
#include "exbraid/labels_data.hpp"
#include "json.hpp"

namespace exbraid {

namespace {

struct LabelTable {
  std::map<Algebra, std::vector<std::size_t>> map;
  std::map<Algebra, long> l1_dim;
};

const LabelTable& table() {
  static const LabelTable t = [] {
    LabelTable out;
    const auto j = nlohmann::json::parse(detail::kLabelsJson);
    for (Algebra a : all_algebras()) {
      const auto& e = j.at("types").at(algebra_name(a));
      out.map[a] = e.at("map").get<std::vector<std::size_t>>();
      out.l1_dim[a] = e.at("l1_dim").get<long>();
      if (out.map[a].size() != RootSystem::get(a).rank())
        throw InternalError("label map for " + algebra_name(a) + " has the wrong rank");
    }
    return out;
  }();
  return t;
}

}  // namespace

std::size_t internal_index(Algebra a, std::size_t label) {
  const auto& m = table().map.at(a);
  if (label < 1 || label > m.size()) throw PreconditionError("label index out of range");
  return m[label - 1];
}

std::size_t label_index(Algebra a, std::size_t internal) {
  const auto& m = table().map.at(a);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] == internal) return i + 1;
  throw PreconditionError("internal index out of range");
}

long l1_dimension(Algebra a) { return table().l1_dim.at(a); }

Weight from_labels(Algebra a, const std::vector<int>& lc) {
  const std::size_t n = RootSystem::get(a).rank();
  if (lc.size() != n) throw PreconditionError("expected " + std::to_string(n) + " coordinates");
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) w[internal_index(a, i + 1) - 1] = lc[i];
  return w;
}

std::vector<int> to_labels(Algebra a, const Weight& w) {
  std::vector<int> out(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) out[label_index(a, i + 1) - 1] = w[i];
  return out;
}

std::string label_string(Algebra a, const Weight& w) {
  const auto lc = to_labels(a, w);
  std::string s;
  for (std::size_t i = 0; i < lc.size(); ++i) {
    if (lc[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (lc[i] != 1) s += std::to_string(lc[i]);
    s += "l" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Weight parse_object(Algebra a, const std::string& text) {
  const std::size_t n = RootSystem::get(a).rank();
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t.empty()) throw PreconditionError("empty object");
  if (t == "0") return Weight(n);

  static const std::regex coords(R"(\(?(-?\d+(,-?\d+)*)\)?)");
  std::smatch m;
  if (std::regex_match(t, m, coords) && t.find(',') != std::string::npos) {
    std::vector<int> xs;
    std::string cur;
    for (char c : m[1].str() + ",") {
      if (c == ',') {
        xs.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (xs.size() != n) throw PreconditionError("expected " + std::to_string(n) + " coordinates in '" + text + "'");
    Weight w(xs);
    if (!w.is_dominant()) throw PreconditionError("weight '" + text + "' is not dominant");
    return w;
  }

  static const std::regex term(R"((\d*)l(\d+))");
  std::vector<int> lc(n, 0);
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t next = t.find('+', pos);
    if (next == std::string::npos) next = t.size();
    const std::string piece = t.substr(pos, next - pos);
    if (!std::regex_match(piece, m, term)) throw PreconditionError("cannot parse object '" + text + "'");
    const int k = m[1].str().empty() ? 1 : std::stoi(m[1].str());
    const std::size_t idx = std::stoul(m[2].str());
    if (idx < 1 || idx > n) throw PreconditionError("label index out of range in '" + text + "'");
    lc[idx - 1] += k;
    pos = next + 1;
    if (next == t.size()) break;
    if (pos == t.size()) throw PreconditionError("trailing '+' in '" + text + "'");
  }
  return from_labels(a, lc);
}

}  // namespace exbraid
