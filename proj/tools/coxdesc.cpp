// coxdesc: descent-type subalgebras of group algebras of finite Coxeter groups.
//
//   info     group summary (order, reflections, classes, longest element)
//   descent  admissible descent subsets, class sizes, stability, rank
//   algebra  closure verdicts, structure constants, theta report, exports
//   verify   re-derive every built-in expected table and report pass/fail
//   scan     classify all reflection subsets of a group
//
// Exit codes: 0 success, 1 verification/identity failure, 2 usage error.

#include "coxdesc/dihedral.hpp"
#include "coxdesc/export_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace coxdesc;
using nlohmann::json;

namespace {

struct GroupArgs
{
	std::string type;
	std::string matrix_json;
	std::string cache_dir;
};

void add_group_args(CLI::App* cmd, GroupArgs& args)
{
	auto* t = cmd->add_option("--type", args.type,
	                          "named type (A2, B3, F4, G2, H3, I2_8, B2xA1, ...)");
	auto* m = cmd->add_option("--matrix", args.matrix_json,
	                          "explicit Coxeter matrix as JSON {rank, entries, labels}");
	t->excludes(m);
	cmd->add_option("--cache-dir", args.cache_dir,
	                "directory for content-addressed group caches");
}

CoxeterGroup build_group(const GroupArgs& args)
{
	CoxeterMatrix m;
	if (!args.type.empty())
		m = CoxeterMatrix::of_type(args.type);
	else if (!args.matrix_json.empty())
	{
		json j = json::parse(args.matrix_json);
		m.rank = j.at("rank").get<unsigned>();
		m.entries = j.at("entries").get<std::vector<unsigned>>();
		if (j.contains("labels"))
			m.labels = j.at("labels").get<std::vector<std::string>>();
		else
			m.labels = CoxeterMatrix(m.rank).labels;
		m.validate();
	}
	else
		throw CLI::ValidationError("group", "one of --type or --matrix is required");
	return load_or_build_group(m, args.cache_dir);
}

unsigned parse_generators(const CoxeterGroup& g, const std::string& text)
{
	if (text == "ALL" || text == "all")
		return (1u << g.rank()) - 1;
	if (text.empty() || text == "NONE" || text == "none")
		return 0;
	unsigned mask = 0;
	std::stringstream ss(text);
	std::string tok;
	while (std::getline(ss, tok, ','))
	{
		bool found = false;
		for (unsigned s = 0; s < g.rank(); ++s)
			if (g.matrix().labels[s] == tok)
			{
				mask |= 1u << s;
				found = true;
			}
		if (!found)
			throw CLI::ValidationError("--S1/--S2", "unknown generator label: " + tok);
	}
	return mask;
}

// Reflection subset spec: comma-separated reflection words or positive-root
// indices; keywords S, T; rank-2 presets A ({s,t,sts}) and B ({s} + class of t).
RootMask parse_subset(const CoxeterGroup& g, const std::string& text)
{
	if (text == "S")
		return g.simple_mask();
	if (text == "T")
		return g.all_reflections_mask();
	if ((text == "A" || text == "B") && g.rank() == 2)
	{
		RootMask sts = root_bit(g.reflection_root(g.element_of_word("sts")));
		if (text == "A")
			return root_bit(0) | root_bit(1) | sts;
		return root_bit(0) | g.generator_class_mask(1);
	}
	RootMask mask = 0;
	std::stringstream ss(text);
	std::string tok;
	while (std::getline(ss, tok, ','))
	{
		if (tok.empty())
			continue;
		if (tok.find_first_not_of("0123456789") == std::string::npos)
		{
			int idx = std::stoi(tok);
			if (idx < 0 || idx >= g.positive_roots())
				throw CLI::ValidationError("--A", "root index out of range: " + tok);
			mask |= root_bit(idx);
			continue;
		}
		int e = g.element_of_word(tok);
		int r = g.reflection_root(e);
		if (r < 0)
			throw CLI::ValidationError("--A", "word is not a reflection: " + tok);
		mask |= root_bit(r);
	}
	return mask;
}

std::string subset_str(const CoxeterGroup& g, RootMask m)
{
	std::string out = "{";
	bool first = true;
	for_each_root(m, [&](int r) {
		if (!first)
			out += ",";
		out += g.word_str(g.reflection_elem(r));
		first = false;
	});
	return out + "}";
}

void write_output(const std::string& text, const std::string& path)
{
	if (path.empty())
		std::cout << text << "\n";
	else
	{
		std::ofstream out(path);
		out << text;
	}
}

// --- subcommand bodies ------------------------------------------------------

int cmd_info(const GroupArgs& gargs, const std::string& format)
{
	CoxeterGroup g = build_group(gargs);
	if (format == "json")
	{
		json j;
		j["order"] = g.order();
		j["positive_roots"] = g.positive_roots();
		j["reflections"] = g.positive_roots();
		j["rank"] = g.rank();
		j["labels"] = g.matrix().labels;
		j["longest_element"] = g.word_str(g.longest_element());
		j["conjugacy_classes"] = g.class_count();
		json classes = json::array();
		for (const auto& cls : g.reflection_classes())
		{
			json c = json::array();
			for (int r : cls)
				c.push_back(g.word_str(g.reflection_elem(r)));
			classes.push_back(c);
		}
		j["reflection_classes"] = classes;
		json comps = json::array();
		for (const auto& comp : g.components())
		{
			json c = json::array();
			for (unsigned s : comp)
				c.push_back(g.matrix().labels[s]);
			comps.push_back(c);
		}
		j["components"] = comps;
		json mp = json::array();
		for (const auto& c : g.field().minpoly())
			mp.push_back(to_string(c));
		j["field"] = {{"n", g.field().n()}, {"minpoly", mp}};
		std::cout << j.dump(1) << "\n";
		return 0;
	}
	std::cout << "order           " << g.order() << "\n"
	          << "reflections     " << g.positive_roots() << "\n"
	          << "conj classes    " << g.class_count() << "\n"
	          << "components      " << g.components().size() << "\n"
	          << "longest element " << g.word_str(g.longest_element()) << " (length "
	          << g.length(g.longest_element()) << ")\n"
	          << "field           Q(2cos(pi/" << g.field().n() << ")), degree "
	          << g.field().degree() << "\n";
	std::cout << "reflection classes:\n";
	for (const auto& cls : g.reflection_classes())
	{
		std::cout << "  {";
		for (std::size_t i = 0; i < cls.size(); ++i)
			std::cout << (i ? "," : "") << g.word_str(g.reflection_elem(cls[i]));
		std::cout << "}\n";
	}
	return 0;
}

struct SubsetArgs
{
	std::string a_spec;
	std::string s1, s2;
	RootMask resolve(const CoxeterGroup& g) const
	{
		if (!a_spec.empty())
			return parse_subset(g, a_spec);
		return class_union_set(g, parse_generators(g, s1), parse_generators(g, s2));
	}
};

void add_subset_args(CLI::App* cmd, SubsetArgs& args)
{
	auto* a = cmd->add_option(
	    "--A", args.a_spec,
	    "reflection subset: words/root indices, or S, T, A ({s,t,sts}), B ({s}+class of t)");
	auto* s1 = cmd->add_option("--S1", args.s1, "generator labels (or ALL) for the plain part");
	auto* s2 = cmd->add_option("--S2", args.s2,
	                           "generator labels whose full reflection classes are added");
	a->excludes(s1);
	a->excludes(s2);
}

int cmd_descent(const GroupArgs& gargs, const SubsetArgs& sargs, const std::string& format,
                int threads, const std::string& out_path)
{
	CoxeterGroup g = build_group(gargs);
	RootMask A = sargs.resolve(g);
	DescentTable table = DescentTable::build(g, A);
	DescentAlgebra alg = descent_algebra(g, table, threads, 0);
	auto witness = descent_stability_violation(g, A, threads);
	bool connected = true;
	for (int k = 0; k < table.class_count(); ++k)
		connected = connected && left_connected(g, table.cls(k).elements);

	if (format == "json")
	{
		json j;
		j["subset"] = json::array();
		for_each_root(A, [&](int r) { j["subset"].push_back(g.word_str(g.reflection_elem(r))); });
		j["admissible_count"] = table.class_count();
		j["stable"] = !witness.has_value();
		if (witness)
			j["stability_witness"] = {{"reflection", g.word_str(g.reflection_elem(witness->refl_root))},
			                          {"element", g.word_str(witness->elem)}};
		j["closed"] = alg.closed;
		j["has_unit"] = alg.has_unit;
		j["left_connected"] = connected;
		json classes = json::array();
		for (int k = 0; k < table.class_count(); ++k)
		{
			json c;
			c["descents"] = json::array();
			for_each_root(table.cls(k).descents,
			              [&](int r) { c["descents"].push_back(g.word_str(g.reflection_elem(r))); });
			c["size"] = table.cls(k).elements.size();
			c["min_rep"] = g.word_str(table.cls(k).min_rep);
			classes.push_back(c);
		}
		j["classes"] = classes;
		write_output(j.dump(1), out_path);
		return 0;
	}
	std::ostringstream os;
	os << "A = " << subset_str(g, A) << "  (" << mask_size(A) << " reflections)\n"
	   << "admissible subsets: " << table.class_count() << " (= rank of the span)\n"
	   << "descent-stable:     " << (witness ? "no" : "yes");
	if (witness)
		os << "  (witness r = " << g.word_str(g.reflection_elem(witness->refl_root))
		   << ", w = " << g.word_str(witness->elem) << ")";
	os << "\n"
	   << "span closed:        " << (alg.closed ? "yes" : "no") << "\n"
	   << "contains identity:  " << (alg.has_unit ? "yes" : "no") << "\n"
	   << "left-connected:     " << (connected ? "yes (all classes)" : "NO") << "\n"
	   << "classes:\n";
	for (int k = 0; k < table.class_count(); ++k)
		os << "  " << subset_str(g, table.cls(k).descents) << "  size "
		   << table.cls(k).elements.size() << "  min rep " << g.word_str(table.cls(k).min_rep)
		   << "\n";
	write_output(os.str(), out_path);
	return 0;
}

int cmd_algebra(const GroupArgs& gargs, const SubsetArgs& sargs, const std::string& format,
                int threads, std::size_t budget, const std::string& out_path)
{
	CoxeterGroup g = build_group(gargs);
	RootMask A = sargs.resolve(g);
	DescentTable table = DescentTable::build(g, A);
	DescentAlgebra alg = descent_algebra(g, table, threads, 64);
	CosetModule mod = coset_module(g, A, budget, threads);
	ThetaMap theta = theta_map(g, mod);

	if (format == "csv")
	{
		if (!alg.closed)
		{
			std::cerr << "span is not closed; no structure constants to export\n";
			return 2;
		}
		write_output(structure_export_csv(g, table), out_path);
		return 0;
	}
	if (format == "json")
	{
		json j = structure_export(g, table);
		j["sigma"] = {{"rank", mod.rank},
		              {"closed", mod.closed},
		              {"canonical_family_size", mod.entries.size()},
		              {"canonical_family_is_basis", mod.p0_is_basis},
		              {"contained_in_descent_span", mod.contained_in_descent_algebra},
		              {"has_unit", mod.has_unit}};
		std::string status = theta.status == ThetaMap::Status::morphism ? "morphism"
		                     : theta.status == ThetaMap::Status::not_morphism
		                         ? "not_morphism"
		                         : "undefined";
		j["theta"] = {{"status", status},
		              {"reason", theta.reason},
		              {"well_defined", theta.well_defined},
		              {"kernel_rank", theta.kernel.size()}};
		write_output(j.dump(1), out_path);
		return 0;
	}
	std::ostringstream os;
	os << "A = " << subset_str(g, A) << "\n"
	   << "descent span:  rank " << alg.rank << ", " << (alg.closed ? "closed" : "NOT closed");
	if (alg.closed)
		os << ", counting==convolution: " << (alg.counting_matches_convolution ? "yes" : "NO");
	if (!alg.closed && alg.witness)
		os << "  (witness pair " << alg.witness->i << "," << alg.witness->j << ")";
	os << "\n"
	   << "coset module:  rank " << mod.rank << ", " << (mod.closed ? "closed" : "NOT closed")
	   << ", inside descent span: " << (mod.contained_in_descent_algebra ? "yes" : "no") << "\n"
	   << "theta:         ";
	switch (theta.status)
	{
	case ThetaMap::Status::morphism:
		os << "algebra morphism";
		break;
	case ThetaMap::Status::not_morphism:
		os << "linear, not a morphism";
		break;
	case ThetaMap::Status::undefined:
		os << "undefined (" << theta.reason << ")";
		break;
	}
	os << ", kernel rank " << theta.kernel.size() << "\n";
	if (alg.tensor_available)
	{
		os << "structure constants (d_I * d_J = sum_K c d_K, nonzero entries):\n";
		for (int i = 0; i < alg.rank; ++i)
			for (int j = 0; j < alg.rank; ++j)
			{
				os << "  " << subset_str(g, table.cls(i).descents) << " * "
				   << subset_str(g, table.cls(j).descents) << " =";
				bool any = false;
				for (int k = 0; k < alg.rank; ++k)
					if (alg.tensor[i][j][k] != 0)
					{
						os << (any ? " +" : "") << " ";
						if (alg.tensor[i][j][k] != 1)
							os << alg.tensor[i][j][k] << "*";
						os << subset_str(g, table.cls(k).descents);
						any = true;
					}
				if (!any)
					os << " 0";
				os << "\n";
			}
	}
	write_output(os.str(), out_path);
	return 0;
}

int cmd_verify(const std::string& only, const std::string& data_dir, int threads, bool verbose,
               const std::string& report_path)
{
	VerifyOptions opts;
	opts.data_dir = data_dir;
	opts.threads = threads;
	std::vector<CheckResult> results;
	for (const auto& section : verification_sections())
	{
		if (!only.empty() && section.rfind(only, 0) != 0)
			continue;
		if (verbose)
			std::cerr << "[verify] " << section << "...\n";
		run_verification_section(section, opts, results);
	}
	if (results.empty())
	{
		std::cerr << "error: no verification section matches '" << only << "'\n";
		return 2;
	}
	int failures = 0;
	for (const auto& r : results)
	{
		if (!r.pass)
			++failures;
		std::cout << (r.pass ? "pass  " : "FAIL  ") << r.id;
		if (!r.pass)
			std::cout << "  [" << r.lhs << " | expected " << r.rhs << "]";
		std::cout << "\n";
	}
	std::cout << results.size() - failures << "/" << results.size() << " identities pass\n";
	if (!report_path.empty())
	{
		std::ofstream out(report_path);
		out << report_to_json(results);
	}
	return failures == 0 ? 0 : 1;
}

int cmd_scan(const GroupArgs& gargs, bool contains_gens, int max_reflections, int threads,
             const std::string& format, const std::string& out_path)
{
	CoxeterGroup g = build_group(gargs);
	SubsetScanOptions so;
	so.require_contains_generators = contains_gens;
	so.max_reflections = max_reflections;
	so.threads = threads;
	auto rows = scan_reflection_subsets(g, so);
	if (format == "json")
	{
		write_output(scan_export(g, rows).dump(1), out_path);
		return 0;
	}
	if (format == "csv")
	{
		write_output(scan_export_csv(g, rows), out_path);
		return 0;
	}
	std::ostringstream os;
	os << "subset | stable closed S<=A class-union | flags\n";
	for (const auto& r : rows)
	{
		os << subset_str(g, r.subset) << " | " << r.stable << " " << r.closed << " "
		   << r.contains_generators << " " << r.class_union_form << " |";
		if (r.converse_candidate())
			os << " closed-but-not-stable";
		if (r.question_candidate())
			os << " stable-outside-class-union-form";
		os << "\n";
	}
	write_output(os.str(), out_path);
	return 0;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"descent-type subalgebras of group algebras of finite Coxeter groups"};
	app.require_subcommand(1);
	int threads = 1;
	app.add_option("--threads", threads, "parallelism degree for the scan kernels")
	    ->capture_default_str();
	bool verbose = false;
	app.add_flag("-v,--verbose", verbose, "progress notes on stderr");

	GroupArgs info_g, descent_g, algebra_g, scan_g;
	SubsetArgs descent_s, algebra_s;
	std::string info_fmt = "table", descent_fmt = "table", algebra_fmt = "table",
	            scan_fmt = "table";
	std::string descent_out, algebra_out, scan_out, verify_only, verify_report;
	std::string data_dir = "data";
	std::size_t budget = 1 << 16;
	bool scan_contains = false;
	int scan_max = 15;

	auto* info = app.add_subcommand("info", "group summary");
	info->fallthrough();
	add_group_args(info, info_g);
	info->add_option("--format", info_fmt, "table or json");

	auto* descent = app.add_subcommand("descent", "descent classes for a reflection subset");
	descent->fallthrough();
	add_group_args(descent, descent_g);
	add_subset_args(descent, descent_s);
	descent->add_option("--format", descent_fmt, "table or json");
	descent->add_option("--out", descent_out, "write to a file instead of stdout");

	auto* algebra = app.add_subcommand("algebra", "spans, closure, structure constants, theta");
	algebra->fallthrough();
	add_group_args(algebra, algebra_g);
	add_subset_args(algebra, algebra_s);
	algebra->add_option("--format", algebra_fmt, "table, json or csv");
	algebra->add_option("--out", algebra_out, "write to a file instead of stdout");
	algebra->add_option("--budget", budget, "generator budget for the coset module");

	auto* verify = app.add_subcommand("verify", "re-derive all built-in expected tables");
	verify->fallthrough();
	verify->add_option("--only", verify_only,
	                   "run only sections with this prefix (f4, dihedral-a, dihedral-a-props, "
	                   "dihedral-b, g2-b, idempotents, properties, infinite, scan)");
	verify->add_option("--data-dir", data_dir, "fixture directory")->capture_default_str();
	verify->add_option("--report", verify_report, "write the JSON report here");

	auto* infinite = app.add_subcommand(
	    "infinite-dihedral", "bounded descent-stability scan of the infinite dihedral group");
	infinite->fallthrough();
	std::string inf_a = "s,t,sts";
	int inf_bound = 50;
	infinite->add_option("--A", inf_a, "reflections as alternating words")
	    ->capture_default_str();
	infinite->add_option("--length-bound", inf_bound, "scan elements up to this length")
	    ->capture_default_str();

	auto* scan = app.add_subcommand("scan", "classify all reflection subsets");
	scan->fallthrough();
	add_group_args(scan, scan_g);
	scan->add_flag("--contains-generators", scan_contains, "only subsets containing S");
	scan->add_option("--max-reflections", scan_max, "guard on 2^|T|")->capture_default_str();
	scan->add_option("--format", scan_fmt, "table, json or csv");
	scan->add_option("--out", scan_out, "write to a file instead of stdout");

	try
	{
		app.parse(argc, argv);
		if (info->parsed())
			return cmd_info(info_g, info_fmt);
		if (descent->parsed())
			return cmd_descent(descent_g, descent_s, descent_fmt, threads, descent_out);
		if (algebra->parsed())
			return cmd_algebra(algebra_g, algebra_s, algebra_fmt, threads, budget, algebra_out);
		if (verify->parsed())
			return cmd_verify(verify_only, data_dir, threads, verbose, verify_report);
		if (infinite->parsed())
		{
			std::vector<std::string> words;
			std::stringstream ss(inf_a);
			std::string tok;
			while (std::getline(ss, tok, ','))
				if (!tok.empty())
					words.push_back(tok);
			auto rep = infinite_descent_stability(words, inf_bound);
			std::cout << "A = {" << inf_a << "}, length bound " << inf_bound << ", "
			          << rep.pairs_checked << " pairs checked\n";
			if (rep.stable())
				std::cout << "descent-stable: yes\n";
			else
			{
				std::cout << "descent-stable: no\n";
				for (const auto& [r, w] : rep.violations)
					std::cout << "  violation at r = " << r << ", w = " << w << "\n";
			}
			return 0;
		}
		if (scan->parsed())
			return cmd_scan(scan_g, scan_contains, scan_max, threads, scan_fmt, scan_out);
	}
	catch (const CLI::ParseError& e)
	{
		app.exit(e);
		return 2;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
