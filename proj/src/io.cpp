#include "io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace weakconv {

namespace {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::uint64_t value = 0;
  const std::string t = trim(s);
  const auto [ptr, ec] =
      std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    fail(ErrorCode::Parse, what + ": expected a nonnegative integer, got \"" +
                               s + "\"");
  return value;
}

// Splits "a,b,c" at top-level commas (commas inside parentheses stay put).
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (const char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// Returns nullptr when the string is not name(...)-shaped at all.
GroupPtr parse_shorthand(const std::string& spec) {
  const std::string s = trim(spec);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return nullptr;
  const std::string name = trim(s.substr(0, open));
  if (name != "cyclic" && name != "torus_grid" && name != "dihedral" &&
      name != "symmetric" && name != "product")
    return nullptr;
  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  const auto args = trim(inner).empty() ? std::vector<std::string>{}
                                        : split_args(inner);
  const auto expect_argc = [&](std::size_t c) {
    require(args.size() == c, ErrorCode::Parse,
            name + ": expected " + std::to_string(c) + " argument(s), got " +
                std::to_string(args.size()) + " in \"" + spec + "\"");
  };
  if (name == "cyclic") {
    expect_argc(1);
    return MeasuredGroup::cyclic(parse_uint(args[0], name));
  }
  if (name == "torus_grid") {
    expect_argc(2);
    return MeasuredGroup::torus_grid(
        parse_uint(args[0], name),
        static_cast<std::uint32_t>(parse_uint(args[1], name)));
  }
  if (name == "dihedral") {
    expect_argc(1);
    return MeasuredGroup::dihedral(parse_uint(args[0], name));
  }
  if (name == "symmetric") {
    expect_argc(1);
    return MeasuredGroup::symmetric(
        static_cast<std::uint32_t>(parse_uint(args[0], name)));
  }
  require(args.size() >= 2, ErrorCode::Parse,
          "product: expected at least 2 factors in \"" + spec + "\"");
  GroupPtr acc = parse_shorthand(args[0]);
  require(acc != nullptr, ErrorCode::Parse,
          "product: unrecognized factor \"" + args[0] + "\"");
  for (std::size_t i = 1; i < args.size(); ++i) {
    GroupPtr next = parse_shorthand(args[i]);
    require(next != nullptr, ErrorCode::Parse,
            "product: unrecognized factor \"" + args[i] + "\"");
    acc = MeasuredGroup::product(std::move(acc), std::move(next));
  }
  return acc;
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(ErrorCode::Parse, what + ": malformed JSON");
  return j;
}

double json_number(const json& j, const std::string& what) {
  if (!j.is_number())
    fail(ErrorCode::Parse, what + ": expected a number, got " + j.dump());
  return j.get<double>();
}

cplx json_complex(const json& j, const std::string& what) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return cplx(json_number(j[0], what), json_number(j[1], what));
  fail(ErrorCode::Parse,
       what + ": expected a number or an [re, im] pair, got " + j.dump());
}

GroupPtr group_from_json(const json& j, const std::filesystem::path& base);

GroupPtr group_from_json_kind(const json& j, const std::string& kind,
                              const std::filesystem::path& base) {
  const auto uint_field = [&](const char* name) {
    require(j.contains(name), ErrorCode::Parse,
            "group spec: kind \"" + kind + "\" needs field \"" + name + "\"");
    const json& v = j.at(name);
    require(v.is_number_unsigned(), ErrorCode::Parse,
            std::string("group spec: field \"") + name +
                "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
  };
  if (kind == "cyclic") return MeasuredGroup::cyclic(uint_field("n"));
  if (kind == "torus_grid")
    return MeasuredGroup::torus_grid(
        uint_field("n"), static_cast<std::uint32_t>(uint_field("dim")));
  if (kind == "dihedral") return MeasuredGroup::dihedral(uint_field("n"));
  if (kind == "symmetric")
    return MeasuredGroup::symmetric(
        static_cast<std::uint32_t>(uint_field("n")));
  if (kind == "product") {
    require(j.contains("factors") && j.at("factors").is_array() &&
                j.at("factors").size() >= 2,
            ErrorCode::Parse,
            "group spec: product needs an array \"factors\" of length >= 2");
    GroupPtr acc;
    for (const json& f : j.at("factors")) {
      GroupPtr g = group_from_json(f, base);
      acc = acc ? MeasuredGroup::product(std::move(acc), std::move(g))
                : std::move(g);
    }
    return acc;
  }
  if (kind == "table") {
    require(j.contains("path") && j.at("path").is_string(), ErrorCode::Parse,
            "group spec: table needs a string field \"path\"");
    std::filesystem::path p = j.at("path").get<std::string>();
    if (p.is_relative()) p = base / p;
    return load_cayley_table(p);
  }
  fail(ErrorCode::Parse, "group spec: unknown kind \"" + kind + "\"");
}

GroupPtr group_from_json(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    GroupPtr g = parse_shorthand(j.get<std::string>());
    require(g != nullptr, ErrorCode::Parse,
            "group spec: unrecognized shorthand \"" + j.get<std::string>() +
                "\"");
    return g;
  }
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(),
          ErrorCode::Parse,
          "group spec: expected an object with a string \"kind\"");
  return group_from_json_kind(j, j.at("kind").get<std::string>(), base);
}

}  // namespace

GroupPtr load_group_spec(const std::string& spec) {
  const std::string s = trim(spec);
  require(!s.empty(), ErrorCode::Parse, "group spec: empty string");
  if (GroupPtr g = parse_shorthand(s)) return g;
  if (s.front() == '{')
    return group_from_json(parse_json(s, "group spec"),
                           std::filesystem::current_path());
  const std::filesystem::path path(s);
  if (!std::filesystem::exists(path))
    fail(ErrorCode::Parse,
         "group spec \"" + s +
             "\": not a recognized shorthand, inline JSON, or existing file");
  const std::string text = read_text_file(path);
  const std::string head = trim(text);
  if (!head.empty() && head.front() == '{')
    return group_from_json(parse_json(text, "group spec file " + s),
                           path.parent_path());
  return load_cayley_table(path);
}

GroupPtr load_cayley_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::Io, "cannot open table file " + path.string());
  const std::string where = "table file " + path.string();
  std::string line;
  std::size_t lineno = 0;
  std::vector<elem_t> entries;
  std::uint64_t n = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::uint64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                   ": expected an integer, got \"" + tok +
                                   "\"");
      if (!have_n) {
        require(value >= 1, ErrorCode::Parse,
                where + ", line " + std::to_string(lineno) +
                    ": group order must be >= 1");
        n = value;
        have_n = true;
      } else {
        if (value >= n)
          fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                     ": entry " + std::to_string(value) +
                                     " out of range for order " +
                                     std::to_string(n));
        entries.push_back(static_cast<elem_t>(value));
      }
    }
  }
  require(have_n, ErrorCode::Parse, where + ": empty file");
  require(entries.size() == n * n, ErrorCode::Parse,
          where + ": expected " + std::to_string(n * n) + " entries, got " +
              std::to_string(entries.size()));
  return MeasuredGroup::from_table(std::move(entries),
                                   static_cast<std::size_t>(n),
                                   path.stem().string());
}

GroupFunction read_function(const GroupPtr& g,
                            const std::filesystem::path& path) {
  require(g != nullptr, ErrorCode::InvalidArgument,
          "read_function: null group");
  const std::string text = read_text_file(path);
  const std::string where = "function file " + path.string();
  const std::string head = trim(text);
  require(!head.empty(), ErrorCode::Parse, where + ": empty file");

  std::vector<cplx> values;
  if (head.front() == '{' || head.front() == '[') {
    json j = parse_json(text, where);
    const json* arr = &j;
    if (j.is_object()) {
      require(j.contains("values") && j.at("values").is_array(),
              ErrorCode::Parse, where + ": missing \"values\" array");
      if (j.contains("format"))
        require(j.at("format") == "weakconv-function", ErrorCode::Parse,
                where + ": unexpected format " + j.at("format").dump());
      if (j.contains("length"))
        require(j.at("length").is_number_unsigned() &&
                    j.at("length").get<std::size_t>() ==
                        j.at("values").size(),
                ErrorCode::Parse,
                where + ": declared length does not match the values array");
      arr = &j.at("values");
    }
    require(arr->is_array(), ErrorCode::Parse, where + ": expected an array");
    values.reserve(arr->size());
    for (std::size_t i = 0; i < arr->size(); ++i)
      values.push_back(
          json_complex((*arr)[i], where + ", entry " + std::to_string(i)));
  } else {
    // CSV index,re,im; an optional header line is skipped
    values.assign(g->order(), cplx(0.0, 0.0));
    std::vector<bool> seen(g->order(), false);
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string t = trim(line);
      if (t.empty()) continue;
      if (lineno == 1 && !std::isdigit(static_cast<unsigned char>(t[0])) &&
          t[0] != '-' && t[0] != '+')
        continue;  // header
      std::istringstream ls(t);
      std::string idx_s, re_s, im_s;
      if (!std::getline(ls, idx_s, ',') || !std::getline(ls, re_s, ',') ||
          !std::getline(ls, im_s))
        fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                   ": expected index,re,im");
      char* end = nullptr;
      const std::uint64_t idx = parse_uint(idx_s, where + ", line " +
                                                      std::to_string(lineno));
      if (idx >= g->order())
        fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                   ": index " + std::to_string(idx) +
                                   " out of range");
      if (seen[idx])
        fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                   ": duplicate index " + std::to_string(idx));
      const std::string re_t = trim(re_s), im_t = trim(im_s);
      const double re = std::strtod(re_t.c_str(), &end);
      if (end != re_t.c_str() + re_t.size())
        fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                   ": bad real part \"" + re_s + "\"");
      const double im = std::strtod(im_t.c_str(), &end);
      if (end != im_t.c_str() + im_t.size())
        fail(ErrorCode::Parse, where + ", line " + std::to_string(lineno) +
                                   ": bad imaginary part \"" + im_s + "\"");
      seen[idx] = true;
      values[idx] = cplx(re, im);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      require(seen[i], ErrorCode::Parse,
              where + ": missing index " + std::to_string(i));
  }
  require(values.size() == g->order(), ErrorCode::Validation,
          where + ": " + std::to_string(values.size()) +
              " values for a group of order " + std::to_string(g->order()));
  return GroupFunction(g, std::move(values));
}

void write_function(const GroupFunction& f, const std::filesystem::path& path,
                    bool as_csv) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::Io, "cannot write " + path.string());
  if (as_csv) {
    out << "index,re,im\n";
    char buf[64];
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", i, f[i].real(),
                    f[i].imag());
      out << buf << '\n';
    }
  } else {
    json values = json::array();
    for (std::size_t i = 0; i < f.size(); ++i)
      values.push_back({f[i].real(), f[i].imag()});
    const json j = {{"format", "weakconv-function"},
                    {"length", f.size()},
                    {"values", std::move(values)}};
    out << j.dump(2) << '\n';
  }
  if (!out)
    fail(ErrorCode::Io, "write failed for " + path.string());
}

IrrepTable read_irreps(const GroupPtr& g, const std::filesystem::path& path) {
  require(g != nullptr, ErrorCode::InvalidArgument, "read_irreps: null group");
  const std::string where = "irrep file " + path.string();
  json j = parse_json(read_text_file(path), where);
  require(j.is_object() && j.contains("irreps") && j.at("irreps").is_array(),
          ErrorCode::Parse, where + ": expected an object with \"irreps\"");
  if (j.contains("format"))
    require(j.at("format") == "weakconv-irreps", ErrorCode::Parse,
            where + ": unexpected format " + j.at("format").dump());
  IrrepTable table;
  table.group = g;
  const std::size_t n = g->order();
  for (std::size_t r = 0; r < j.at("irreps").size(); ++r) {
    const json& jr = j.at("irreps")[r];
    const std::string tag = where + ", irrep " + std::to_string(r);
    require(jr.is_object() && jr.contains("dim") && jr.contains("matrices"),
            ErrorCode::Parse, tag + ": need \"dim\" and \"matrices\"");
    require(jr.at("dim").is_number_unsigned() && jr.at("dim") >= 1,
            ErrorCode::Parse, tag + ": bad dimension");
    Irrep rep;
    rep.dim = jr.at("dim").get<std::size_t>();
    const json& mats = jr.at("matrices");
    require(mats.is_array() && mats.size() == n, ErrorCode::Parse,
            tag + ": need one matrix per group element (" +
                std::to_string(n) + ")");
    rep.mats.reserve(n * rep.dim * rep.dim);
    for (std::size_t x = 0; x < n; ++x) {
      const json& mx = mats[x];
      require(mx.is_array() && mx.size() == rep.dim * rep.dim,
              ErrorCode::Parse,
              tag + ", element " + std::to_string(x) + ": expected " +
                  std::to_string(rep.dim * rep.dim) + " entries");
      for (std::size_t e = 0; e < mx.size(); ++e)
        rep.mats.push_back(json_complex(
            mx[e], tag + ", element " + std::to_string(x)));
    }
    table.irreps.push_back(std::move(rep));
  }
  validate_irreps(table);
  return table;
}

MultiplierSymbol read_symbol(const GroupPtr& g,
                             const std::filesystem::path& path) {
  require(g != nullptr, ErrorCode::InvalidArgument, "read_symbol: null group");
  const std::string where = "symbol file " + path.string();
  json j = parse_json(read_text_file(path), where);
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(),
          ErrorCode::Parse, where + ": expected an object with \"kind\"");
  if (j.contains("format"))
    require(j.at("format") == "weakconv-symbol", ErrorCode::Parse,
            where + ": unexpected format " + j.at("format").dump());
  MultiplierSymbol sym;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "scalar") {
    require(j.contains("values") && j.at("values").is_array(),
            ErrorCode::Parse, where + ": scalar symbol needs \"values\"");
    const json& vals = j.at("values");
    require(vals.size() == g->order(), ErrorCode::Validation,
            where + ": " + std::to_string(vals.size()) +
                " values for a group of order " +
                std::to_string(g->order()));
    for (std::size_t i = 0; i < vals.size(); ++i)
      sym.scalar.push_back(
          json_complex(vals[i], where + ", entry " + std::to_string(i)));
    return sym;
  }
  if (kind == "matrix") {
    require(j.contains("blocks") && j.at("blocks").is_array(),
            ErrorCode::Parse, where + ": matrix symbol needs \"blocks\"");
    for (std::size_t r = 0; r < j.at("blocks").size(); ++r) {
      const json& jb = j.at("blocks")[r];
      const std::string tag = where + ", block " + std::to_string(r);
      require(jb.is_object() && jb.contains("dim") && jb.contains("values"),
              ErrorCode::Parse, tag + ": need \"dim\" and \"values\"");
      MatrixBlock blk;
      blk.dim = jb.at("dim").get<std::size_t>();
      const json& vals = jb.at("values");
      require(vals.is_array() && vals.size() == blk.dim * blk.dim,
              ErrorCode::Parse, tag + ": expected " +
                                    std::to_string(blk.dim * blk.dim) +
                                    " entries");
      for (std::size_t e = 0; e < vals.size(); ++e)
        blk.a.push_back(json_complex(vals[e], tag));
      sym.blocks.push_back(std::move(blk));
    }
    require(!sym.blocks.empty(), ErrorCode::Validation,
            where + ": matrix symbol has no blocks");
    return sym;
  }
  fail(ErrorCode::Parse,
       where + ": kind must be \"scalar\" or \"matrix\", got \"" + kind +
           "\"");
}

}  // namespace weakconv
