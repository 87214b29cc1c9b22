// ptrans: command-line front end for discrete parallel transport on
// triangulated surfaces.
//
// Exit codes: 0 success, 1 domain failure (diagnostics, invalid move,
// failed check), 2 usage or I/O error.

#include <cstdint>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ptrans/ptrans.hpp>

namespace {

using namespace ptrans;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string complex_file;
  std::string connection_file;
  std::vector<std::string> scheme_files;
  std::string word;
  std::string path;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string kind;
  bool reverse_beta = false;
  std::string from;
  std::string to;
  std::size_t depth = 4;
  std::size_t count = 1000;
  std::string convention = "word";
  std::vector<std::string> vertices;
  std::string descriptor;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::shared_ptr<const SimplicialComplex> load_complex_file(const Options& o)
{
  if (o.complex_file.empty())
    throw UsageError("--complex is required");
  return std::make_shared<const SimplicialComplex>(load_complex(read_file(o.complex_file)));
}

/// Letters of an initial word: a JSON array of element texts or a ';'-separated list.
std::vector<std::string> split_word(const std::string& text)
{
  std::vector<std::string> out;
  if (!text.empty() && text.front() == '[') {
    for (const auto& x : json::parse(text)) {
      if (x.is_number_integer())
        out.push_back(std::to_string(x.get<std::int64_t>()));
      else
        out.push_back(x.get<std::string>());
    }
    return out;
  }
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// Identifiers appearing in word letters; these become fresh free generators.
std::vector<std::string> identifiers_in(const std::vector<std::string>& letters)
{
  std::vector<std::string> out;
  for (const auto& l : letters) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty() && cur != "e" && Group::valid_identifier(cur))
        out.push_back(cur);
      cur.clear();
    };
    for (char ch : l) {
      auto u = static_cast<unsigned char>(ch);
      if (std::isalnum(u) || u == '_' || u >= 0x80)
        cur += ch;
      else
        flush();
    }
    flush();
  }
  return out;
}

std::vector<std::string> generic_letters(std::size_t n)
{
  if (n == 1)
    return {"x"};
  if (n == 2)
    return {"x", "y"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back("x" + std::to_string(i + 1));
  return out;
}

/// Loads the connection; for a free group, letters of the word that are not
/// generators yet are added as fresh generators.
Connection2 load_connection_for(const Options& o, std::shared_ptr<const SimplicialComplex> k,
                                const std::vector<std::string>& letters)
{
  if (o.connection_file.empty())
    throw UsageError("--connection is required");
  const std::string text = read_file(o.connection_file);
  Connection2 c = load_connection(text, k);
  if (c.group().kind() == Group::Kind::free) {
    std::vector<std::string> fresh;
    for (const auto& id : identifiers_in(letters)) {
      const auto& gens = c.group().free_generators();
      if (std::find(gens.begin(), gens.end(), id) == gens.end())
        fresh.push_back(id);
    }
    if (!fresh.empty())
      return load_connection(text, k, fresh);
  }
  return c;
}

Section make_section(const EdgePath& p, const std::vector<std::string>& letters, const Group& g)
{
  if (letters.size() != p.size())
    throw UsageError("word has " + std::to_string(letters.size()) + " letters but the path " +
                     to_string(p) + " has " + std::to_string(p.size()) + " steps");
  std::vector<Element> elems;
  for (const auto& l : letters)
    elems.push_back(g.parse(l));
  return Section(p, std::move(elems));
}

std::string format_letters(const std::vector<Element>& letters, const Group& g)
{
  std::string out = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i)
      out += ", ";
    out += g.format(letters[i]);
  }
  return out + ")";
}

std::string format_gauge(const GaugeTransform& n, const Group& g)
{
  std::string out = "{";
  bool first = true;
  for (const auto& [v, x] : n) {
    if (!first)
      out += ", ";
    out += v + ": " + g.format(x);
    first = false;
  }
  return out + "}";
}

void print_trace_text(const SweepTrace& t, const Group& g)
{
  for (const auto& s : t.sections)
    std::cout << to_string(s.path) << " -> " << format_letters(s.letters, g) << "\n";
  for (const auto& n : t.notes)
    std::cout << "note: " << n << "\n";
}

void print_defects_text(const DefectReport& r, const Group& g)
{
  std::cout << "path: " << to_string(r.path) << "\n"
            << "defects: " << format_letters(r.defects, g) << "\n"
            << "gauge: " << format_gauge(r.gauge_used, g) << "\n";
}

int cmd_validate(const Options& o)
{
  if (o.complex_file.empty())
    throw UsageError("--complex is required");
  SimplicialComplex k = parse_complex(read_file(o.complex_file));
  auto diags = validate_complex(k, k.pure_dim2());
  if (json_out(o)) {
    json arr = json::array();
    for (const auto& d : diags)
      arr.push_back({{"rule", d.rule}, {"simplex", d.simplex}, {"message", d.message}});
    std::cout << json{{"valid", diags.empty()},
                      {"vertices", k.vertices().size()},
                      {"edges", k.edges().size()},
                      {"triangles", k.triangles().size()},
                      {"diagnostics", arr}}
                     .dump(2)
              << "\n";
  } else if (diags.empty()) {
    std::cout << "ok: " << k.vertices().size() << " vertices, " << k.edges().size() << " edges, "
              << k.triangles().size() << " triangles\n";
  } else {
    for (const auto& d : diags)
      std::cout << d.rule << ": " << d.message << "\n";
  }
  return diags.empty() ? 0 : 1;
}

int cmd_cells(const Options& o)
{
  auto k = load_complex_file(o);
  std::optional<CellKind> filter;
  if (!o.kind.empty()) {
    for (CellKind c : {CellKind::alpha, CellKind::alpha_star, CellKind::beta, CellKind::beta_star,
                       CellKind::identity_edge, CellKind::identity_vertex})
      if (o.kind == to_string(c))
        filter = c;
    if (!filter)
      throw UsageError("unknown cell kind '" + o.kind + "'");
  }
  auto cells = oriented_triangles(*k, filter, o.reverse_beta);
  if (json_out(o)) {
    json arr = json::array();
    for (const auto& c : cells)
      arr.push_back({{"kind", to_string(c.kind)},
                     {"name", c.name()},
                     {"source", path_to_json(c.source_path)},
                     {"target", path_to_json(c.target_path)},
                     {"direction", c.direction == Direction::forward ? "forward" : "reverse"}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& c : cells)
      std::cout << to_string(c.kind) << " " << c.name() << ": " << to_string(c.source_path) << " => "
                << to_string(c.target_path)
                << (c.direction == Direction::reverse ? " [reverse]" : "") << "\n";
  }
  return 0;
}

int cmd_holonomy(const Options& o)
{
  auto k = load_complex_file(o);
  Connection2 c = load_connection_for(o, k, {});
  if (o.path.empty())
    throw UsageError("--path is required");
  EdgePath p = parse_vertex_sequence(o.path);
  if (!k->supports(p))
    throw std::invalid_argument("path " + to_string(p) + " is not in the complex");
  Element h = holonomy(c.base(), p);
  if (json_out(o))
    std::cout << json{{"path", path_to_json(p)}, {"holonomy", c.group().format(h)}}.dump(2) << "\n";
  else
    std::cout << c.group().format(h) << "\n";
  return 0;
}

SweepScheme load_scheme_file(const std::string& file) { return parse_scheme(read_file(file)); }

ExpandConvention convention_of(const Options& o)
{
  if (o.convention == "word")
    return ExpandConvention::word_calculus;
  if (o.convention == "identity-first")
    return ExpandConvention::identity_first;
  throw UsageError("unknown convention '" + o.convention + "'");
}

int cmd_sweep(const Options& o)
{
  auto k = load_complex_file(o);
  if (o.scheme_files.size() != 1)
    throw UsageError("sweep takes exactly one --scheme");
  SweepScheme scheme = load_scheme_file(o.scheme_files.front());
  auto letters = o.word.empty() ? generic_letters(scheme.start.size()) : split_word(o.word);
  Connection2 c = load_connection_for(o, k, letters);
  Section s0 = make_section(scheme.start, letters, c.group());
  SweepTrace t = run_scheme(s0, scheme, c, convention_of(o));
  if (json_out(o))
    std::cout << trace_to_json(t, c.group()).dump(2) << "\n";
  else
    print_trace_text(t, c.group());
  return 0;
}

int cmd_compare(const Options& o)
{
  auto k = load_complex_file(o);
  if (o.scheme_files.size() != 2)
    throw UsageError("compare takes exactly two --scheme files");
  SweepScheme first = load_scheme_file(o.scheme_files[0]);
  SweepScheme second = load_scheme_file(o.scheme_files[1]);
  auto letters = o.word.empty() ? generic_letters(first.start.size()) : split_word(o.word);
  Connection2 c = load_connection_for(o, k, letters);
  const Group& g = c.group();
  Section s0 = make_section(first.start, letters, g);
  SchemeComparison cmp = compare_schemes(first, second, s0, c);
  if (json_out(o)) {
    json q = json::array();
    for (const auto& x : cmp.quotient)
      q.push_back(g.format(x));
    json j{{"verdict", to_string(cmp.verdict)},
           {"final_first", section_to_json(cmp.first.final_section(), g)},
           {"final_second", section_to_json(cmp.second.final_section(), g)},
           {"quotient", q}};
    if (cmp.gauge)
      j["gauge"] = gauge_to_json(*cmp.gauge, g);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(cmp.verdict) << "\n"
              << "first:    " << to_string(cmp.first.final_section().path) << " -> "
              << format_letters(cmp.first.final_section().letters, g) << "\n"
              << "second:   " << to_string(cmp.second.final_section().path) << " -> "
              << format_letters(cmp.second.final_section().letters, g) << "\n"
              << "quotient: " << format_letters(cmp.quotient, g) << "\n";
    if (cmp.gauge)
      std::cout << "gauge:    " << format_gauge(*cmp.gauge, g) << "\n";
  }
  return 0;
}

int cmd_curvature(const Options& o)
{
  auto k = load_complex_file(o);
  if (o.vertices.size() != 4)
    throw UsageError("curvature takes four vertices a b c d");
  const auto& v = o.vertices;
  auto letters = o.word.empty() ? generic_letters(2) : split_word(o.word);
  Connection2 c = load_connection_for(o, k, letters);
  Section s0 = make_section(EdgePath::through({v[0], v[1], v[3]}), letters, c.group());
  DefectReport r = curvature_square(v[0], v[1], v[2], v[3], s0, c);
  if (json_out(o))
    std::cout << defects_to_json(r, c.group()).dump(2) << "\n";
  else
    print_defects_text(r, c.group());
  return 0;
}

int cmd_center(const Options& o)
{
  if (o.descriptor.empty())
    throw UsageError("center needs a group descriptor, e.g. '{\"symmetric\":3}'");
  Group g = parse_group(std::string_view(o.descriptor));
  auto z = center(g);
  if (json_out(o)) {
    json arr = json::array();
    for (const auto& x : z)
      arr.push_back(g.format(x));
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& x : z)
      std::cout << g.format(x) << "\n";
  }
  return 0;
}

int cmd_search(const Options& o)
{
  auto k = load_complex_file(o);
  if (o.from.empty() || o.to.empty())
    throw UsageError("search needs --from and --to");
  EdgePath p = parse_vertex_sequence(o.from);
  EdgePath q = parse_vertex_sequence(o.to);
  auto found = search_homotopy(p, q, *k, o.depth);
  if (!found) {
    if (json_out(o))
      std::cout << json{{"found", false}}.dump() << "\n";
    else
      std::cout << "none found within " << o.depth << " moves\n";
    return 1;
  }
  if (json_out(o)) {
    std::cout << scheme_to_json(*found).dump(2) << "\n";
  } else {
    auto v = validate_scheme(*found, *k);
    for (std::size_t i = 0; i < v.paths.size(); ++i) {
      std::cout << to_string(v.paths[i]);
      if (i < found->steps.size()) {
        const auto& m = found->steps[i];
        std::cout << "  --" << to_string(m.move) << " " << join_cell_name(m.cell) << " @"
                  << m.position << "-->";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

/// Randomized property checks on the given complex and connection's group.
int cmd_check(const Options& o)
{
  auto k = load_complex_file(o);
  Connection2 c = load_connection_for(o, k, {});
  const Group& g = c.group();
  std::mt19937_64 rng(o.seed);

  struct Tally {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
  };
  std::vector<Tally> tallies{{"holonomy_functoriality"},
                             {"holonomy_x1_invariance"},
                             {"gauge_covariance"},
                             {"alpha_merge_expand_inverse"},
                             {"beta_merge_expand_inverse"}};
  std::vector<VertexId> faces_vertices;
  for (std::size_t n = 0; n < o.count; ++n) {
    Connection1 f = random_connection(g, k, rng);
    EdgePath p = random_path(*k, rng, 6);
    EdgePath q = random_path(*k, rng, 6, p.target());
    auto& t0 = tallies[0];
    ++t0.total;
    t0.passed += holonomy(f, compose(p, q)) == g.multiply(holonomy(f, p), holonomy(f, q));
    auto& t1 = tallies[1];
    ++t1.total;
    t1.passed += holonomy(f, p) == holonomy(f, reduce_x1(p));

    EdgePath loop = random_path_between(*k, rng, 6, p.source(), p.source());
    GaugeTransform gauge = random_gauge(g, *k, rng);
    const Element& na = gauge.at(loop.source());
    auto& t2 = tallies[2];
    ++t2.total;
    t2.passed += holonomy(gauge_transform(f, gauge), loop) ==
                 g.multiply(g.multiply(g.inverse(na), holonomy(f, loop)), na);

    if (!k->triangles().empty()) {
      Connection2 c2 = random_connection2(f, rng);
      const Triangle& t = pick(rng, k->triangles());
      Section s = random_section(EdgePath::through({t[0], t[2]}), g, rng);
      auto& t3 = tallies[3];
      ++t3.total;
      t3.passed += alpha_merge(alpha_expand(s, t[0], t[1], t[2], 0, c2), t[0], t[1], t[2], 0, c2) == s;
      Section loop_section = random_section(EdgePath::identity(t[0]), g, rng);
      auto& t4 = tallies[4];
      ++t4.total;
      t4.passed += beta_merge(beta_expand(loop_section, t[0], t[1], t[2], c2), t[0], t[1], t[2], c2) ==
                   loop_section;
    }
  }
  bool ok = true;
  json arr = json::array();
  for (const auto& t : tallies) {
    ok = ok && t.passed == t.total;
    if (json_out(o))
      arr.push_back({{"property", t.name}, {"passed", t.passed}, {"total", t.total}});
    else
      std::cout << t.name << ": " << t.passed << "/" << t.total << "\n";
  }
  if (json_out(o))
    std::cout << json{{"seed", o.seed}, {"checks", arr}, {"ok", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Discrete parallel transport on triangulated surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized commands")->capture_default_str();

  auto complex_opt = [&](CLI::App* sub) {
    sub->add_option("--complex", o.complex_file, "Complex file (JSON)")->required();
  };
  auto connection_opt = [&](CLI::App* sub) {
    sub->add_option("--connection", o.connection_file, "Connection file (JSON)")->required();
  };
  auto word_opt = [&](CLI::App* sub) {
    sub->add_option("--word", o.word,
                    "Initial letters: 'x;y' or a JSON array; unknown names become free generators");
  };
  // allow global flags after the subcommand name too
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "Seed for randomized commands");
  };

  auto* validate = app.add_subcommand("validate", "Check closure and purity of a complex");
  complex_opt(validate);
  common(validate);

  auto* cells = app.add_subcommand("cells", "List the oriented triangles of a complex");
  complex_opt(cells);
  cells->add_option("--kind", o.kind, "alpha, alpha_star, beta, beta_star, identity_edge, identity_vertex");
  cells->add_flag("--reverse-beta", o.reverse_beta, "Also list reverse-direction beta cells");
  common(cells);

  auto* hol = app.add_subcommand("holonomy", "Holonomy of a connection along a path");
  complex_opt(hol);
  connection_opt(hol);
  hol->add_option("--path", o.path, "Vertex sequence, e.g. a,b,d,a")->required();
  common(hol);

  auto* sweep = app.add_subcommand("sweep", "Run a sweep scheme on an initial word");
  complex_opt(sweep);
  connection_opt(sweep);
  sweep->add_option("--scheme", o.scheme_files, "Scheme file (JSON)")->required();
  sweep->add_option("--convention", o.convention, "Expand letter placement: word or identity-first")
      ->check(CLI::IsMember({"word", "identity-first"}));
  word_opt(sweep);
  common(sweep);

  auto* compare = app.add_subcommand("compare", "Compare the sweeping functors of two schemes");
  complex_opt(compare);
  connection_opt(compare);
  compare->add_option("--scheme", o.scheme_files, "Two scheme files")->required()->expected(2);
  word_opt(compare);
  common(compare);

  auto* curv = app.add_subcommand("curvature", "Defects of the curvature square a b c d");
  complex_opt(curv);
  connection_opt(curv);
  curv->add_option("vertices", o.vertices, "a b c d")->required()->expected(4);
  word_opt(curv);
  common(curv);

  auto* cen = app.add_subcommand("center", "Center of a finite group");
  cen->add_option("descriptor", o.descriptor, "Group descriptor, e.g. '{\"symmetric\":3}'")->required();
  common(cen);

  auto* search = app.add_subcommand("search", "Bounded search for a homotopy between two paths");
  complex_opt(search);
  search->add_option("--from", o.from, "Vertex sequence")->required();
  search->add_option("--to", o.to, "Vertex sequence")->required();
  search->add_option("--depth", o.depth, "Maximum number of moves")->capture_default_str();
  common(search);

  auto* check = app.add_subcommand("check", "Randomized property checks");
  complex_opt(check);
  connection_opt(check);
  check->add_option("--count", o.count, "Cases per property")->capture_default_str();
  common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate)
      return cmd_validate(o);
    if (*cells)
      return cmd_cells(o);
    if (*hol)
      return cmd_holonomy(o);
    if (*sweep)
      return cmd_sweep(o);
    if (*compare)
      return cmd_compare(o);
    if (*curv)
      return cmd_curvature(o);
    if (*cen)
      return cmd_center(o);
    if (*search)
      return cmd_search(o);
    if (*check)
      return cmd_check(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
