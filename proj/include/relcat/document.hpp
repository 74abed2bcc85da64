#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "relcat/category.hpp"
#include "relcat/lr.hpp"
#include "relcat/partial_algebra.hpp"
#include "relcat/ternary.hpp"
#include "relcat/zero.hpp"

namespace relcat {

enum class DocumentKind { ternary, partial_algebra, lr, category, categorical_semigroup };

std::string_view to_string(DocumentKind kind);
std::optional<DocumentKind> parse_document_kind(std::string_view name);

using DocumentPayload =
    std::variant<TernaryStructure, PartialAlgebra, LrStructure, SmallCategory, CategoricalSemigroup>;

/// Interchange form of every structure kind. Triples and table entries are
/// written as [result, left, right]; labels and expectations are display
/// metadata only.
struct StructureDocument {
  DocumentPayload payload;
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, bool>> expected;

  DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
  /// Number of elements, or of morphisms for a category.
  std::size_t size() const;

  bool operator==(const StructureDocument&) const = default;
};

/// Compact single-line JSON unless `pretty`.
std::string emit(const StructureDocument& doc, bool pretty = false);
/// Throws ParseError on malformed JSON or a wrong shape, InvalidArgument on
/// out-of-range indices, LrAxiomViolation for an lr table whose domain is
/// not {rr x = ell y}.
StructureDocument load(std::string_view text);
/// Throws ParseError when the file cannot be read.
StructureDocument load_file(const std::string& path);

/// The relation a document denotes: a partial algebra as its graph, an lr
/// structure or category as its composition, a categorical semigroup as
/// its total multiplication.
TernaryStructure relation_of(const StructureDocument& doc);

/// Applies the conversion functors, passing through the ternary form for
/// partial algebras and through the lr form otherwise. Precondition
/// failures propagate as the library's Error with the blocking witness.
DocumentPayload convert(const DocumentPayload& payload, DocumentKind to);

}  // namespace relcat
