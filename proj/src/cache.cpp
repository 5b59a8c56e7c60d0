#include "coxdesc/coxeter.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace coxdesc {

using nlohmann::json;

// Private-member access for (de)serialization.
struct GroupCacheAccess
{
	static json dump(const CoxeterGroup& g)
	{
		json j;
		j["format"] = "coxdesc-group-cache";
		j["version"] = 1;
		j["matrix"] = {{"rank", g.matrix_.rank},
		               {"entries", g.matrix_.entries},
		               {"labels", g.matrix_.labels}};
		json mp = json::array();
		for (const auto& c : g.field_.minpoly())
			mp.push_back(to_string(c));
		j["field"] = {{"n", g.field_.n()}, {"minpoly", mp}};
		json roots = json::array();
		for (const auto& root : g.roots_)
		{
			json coords = json::array();
			for (const auto& fe : root)
			{
				json cs = json::array();
				for (const auto& q : fe.coeffs())
					cs.push_back(to_string(q));
				coords.push_back(cs);
			}
			roots.push_back(coords);
		}
		j["positive_roots"] = roots;
		json elems = json::array();
		for (int w = 0; w < g.order(); ++w)
		{
			json e;
			e["perm"] = g.perms_[w];
			e["word"] = g.words_[w];
			elems.push_back(e);
		}
		j["elements"] = elems;
		j["reflections"] = g.refl_elem_;
		j["reflection_classes"] = g.refl_classes_;
		j["w0"] = g.w0_;
		j["order"] = g.order();
		return j;
	}

	static CoxeterGroup load(const json& j)
	{
		if (j.at("format") != "coxdesc-group-cache" || j.at("version") != 1)
			throw std::runtime_error("group cache: unknown format/version");
		CoxeterMatrix m;
		m.rank = j.at("matrix").at("rank").get<unsigned>();
		m.entries = j.at("matrix").at("entries").get<std::vector<unsigned>>();
		m.labels = j.at("matrix").at("labels").get<std::vector<std::string>>();
		m.validate();

		// Rebuild from the matrix (root closure and BFS are deterministic), then
		// require the cached data to agree exactly. This both restores the group
		// and checks every stored invariant.
		CoxeterGroup g = CoxeterGroup::build(m);
		if (j.at("order").get<int>() != g.order())
			throw std::runtime_error("group cache: order mismatch");
		if (j.at("field").at("n").get<unsigned>() != g.field_.n())
			throw std::runtime_error("group cache: field mismatch");
		{
			const auto& mp = j.at("field").at("minpoly");
			if (mp.size() != g.field_.minpoly().size())
				throw std::runtime_error("group cache: minpoly mismatch");
			for (std::size_t i = 0; i < mp.size(); ++i)
				if (BigInt(mp[i].get<std::string>()) != g.field_.minpoly()[i])
					throw std::runtime_error("group cache: minpoly mismatch");
		}
		const auto& roots = j.at("positive_roots");
		if (static_cast<int>(roots.size()) != g.positive_roots())
			throw std::runtime_error("group cache: root count mismatch");
		for (int r = 0; r < g.positive_roots(); ++r)
		{
			const auto& coords = roots[r];
			for (unsigned i = 0; i < m.rank; ++i)
			{
				const auto& cs = coords[i];
				const auto& fe = g.roots_[r][i].coeffs();
				if (cs.size() != fe.size())
					throw std::runtime_error("group cache: root coordinate mismatch");
				for (std::size_t k = 0; k < fe.size(); ++k)
					if (rat_from_string(cs[k].get<std::string>()) != fe[k])
						throw std::runtime_error("group cache: root coordinate mismatch");
			}
		}
		const auto& elems = j.at("elements");
		if (static_cast<int>(elems.size()) != g.order())
			throw std::runtime_error("group cache: element count mismatch");
		for (int w = 0; w < g.order(); ++w)
		{
			if (elems[w].at("perm").get<CoxeterGroup::Perm>() != g.perms_[w] ||
			    elems[w].at("word").get<std::vector<std::uint8_t>>() != g.words_[w])
				throw std::runtime_error("group cache: element data mismatch");
		}
		if (j.at("reflections").get<std::vector<int>>() != g.refl_elem_ ||
		    j.at("reflection_classes").get<std::vector<std::vector<int>>>() != g.refl_classes_ ||
		    j.at("w0").get<int>() != g.w0_)
			throw std::runtime_error("group cache: derived data mismatch");
		g.verify_invariants();
		return g;
	}
};

std::string group_to_cache_json(const CoxeterGroup& g)
{
	return GroupCacheAccess::dump(g).dump();
}

CoxeterGroup group_from_cache_json(const std::string& text)
{
	return GroupCacheAccess::load(json::parse(text));
}

CoxeterGroup load_or_build_group(const CoxeterMatrix& m, const std::string& cache_dir)
{
	if (cache_dir.empty())
		return CoxeterGroup::build(m);
	namespace fs = std::filesystem;
	fs::path path = fs::path(cache_dir) / ("group-" + m.fingerprint() + ".json");
	if (fs::exists(path))
	{
		try
		{
			std::ifstream in(path);
			std::stringstream ss;
			ss << in.rdbuf();
			return group_from_cache_json(ss.str());
		}
		catch (const std::exception&)
		{
			// stale or corrupt cache: rebuild silently below
		}
	}
	CoxeterGroup g = CoxeterGroup::build(m);
	std::error_code ec;
	fs::create_directories(fs::path(cache_dir), ec);
	std::ofstream out(path);
	out << group_to_cache_json(g);
	return g;
}

} // namespace coxdesc
