#include "coxdesc/export_io.hpp"

#include <sstream>

namespace coxdesc {

using nlohmann::json;

std::string csv_quote(const std::string& field)
{
	if (field.find_first_of(",\"\n") == std::string::npos)
		return field;
	std::string out = "\"";
	for (char c : field)
	{
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

static json matrix_to_json(const CoxeterMatrix& m)
{
	return json{{"rank", m.rank}, {"entries", m.entries}, {"labels", m.labels}};
}

static CoxeterMatrix matrix_from_json(const json& j)
{
	CoxeterMatrix m;
	m.rank = j.at("rank").get<unsigned>();
	m.entries = j.at("entries").get<std::vector<unsigned>>();
	m.labels = j.at("labels").get<std::vector<std::string>>();
	m.validate();
	return m;
}

static json subset_words(const CoxeterGroup& g, RootMask A)
{
	json out = json::array();
	for_each_root(A, [&](int r) { out.push_back(g.word_str(g.reflection_elem(r))); });
	return out;
}

json structure_export(const CoxeterGroup& g, const DescentTable& table)
{
	json doc;
	doc["format"] = "coxdesc-structure-constants";
	doc["version"] = 1;
	doc["matrix"] = matrix_to_json(g.matrix());
	doc["subset"] = subset_words(g, table.subset());
	json adm = json::array();
	for (int k = 0; k < table.class_count(); ++k)
	{
		json a;
		a["descents"] = subset_words(g, table.cls(k).descents);
		a["class_size"] = table.cls(k).elements.size();
		a["min_rep"] = g.word_str(table.cls(k).min_rep);
		adm.push_back(a);
	}
	doc["admissible"] = adm;
	DescentAlgebra alg = descent_algebra_serial(g, table, 0);
	doc["closed"] = alg.closed;
	doc["rank"] = alg.rank;
	doc["has_unit"] = alg.has_unit;
	// very large tensors are only streamed as CSV; the JSON document then
	// records the omission so validation stays meaningful
	bool include = alg.closed && alg.rank <= 128;
	doc["tensor_included"] = include;
	json tensor = json::array();
	if (include)
	{
		structure_rows(g, table, [&](int I, int J, const std::vector<long long>& row) {
			for (int K = 0; K < table.class_count(); ++K)
				if (row[K] != 0)
					tensor.push_back(json::array({I, J, K, row[K]}));
		});
	}
	doc["tensor"] = tensor;
	return doc;
}

bool validate_structure_export(const json& doc)
{
	if (doc.at("format") != "coxdesc-structure-constants" || doc.at("version") != 1)
		return false;
	CoxeterMatrix m = matrix_from_json(doc.at("matrix"));
	CoxeterGroup g = CoxeterGroup::build(m);
	RootMask A = 0;
	for (const auto& w : doc.at("subset"))
	{
		int r = g.reflection_root(g.element_of_word(w.get<std::string>()));
		if (r < 0)
			return false;
		A |= root_bit(r);
	}
	DescentTable table = DescentTable::build(g, A);
	return structure_export(g, table) == doc;
}

std::string structure_export_csv(const CoxeterGroup& g, const DescentTable& table)
{
	std::ostringstream os;
	os << "I,J,K,c\n";
	structure_rows(g, table, [&](int I, int J, const std::vector<long long>& row) {
		for (int K = 0; K < table.class_count(); ++K)
			if (row[K] != 0)
				os << I << "," << J << "," << K << "," << row[K] << "\n";
	});
	return os.str();
}

json scan_export(const CoxeterGroup& g, const std::vector<SubsetScanRow>& rows)
{
	json out = json::array();
	for (const auto& r : rows)
	{
		json jr;
		jr["subset"] = subset_words(g, r.subset);
		jr["stable"] = r.stable;
		jr["closed"] = r.closed;
		jr["contains_generators"] = r.contains_generators;
		jr["class_union_form"] = r.class_union_form;
		out.push_back(jr);
	}
	return out;
}

std::string scan_export_csv(const CoxeterGroup& g, const std::vector<SubsetScanRow>& rows)
{
	std::ostringstream os;
	os << "subset,stable,closed,contains_generators,class_union_form\n";
	for (const auto& r : rows)
	{
		std::string subset;
		bool first = true;
		for_each_root(r.subset, [&](int root) {
			if (!first)
				subset += " ";
			subset += g.word_str(g.reflection_elem(root));
			first = false;
		});
		os << csv_quote(subset) << "," << r.stable << "," << r.closed << ","
		   << r.contains_generators << "," << r.class_union_form << "\n";
	}
	return os.str();
}

} // namespace coxdesc
