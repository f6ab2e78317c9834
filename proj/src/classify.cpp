#include "leibniz/classify.hpp"

namespace leibniz {

std::string tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::Mu1: return "Mu1";
    case ClassTag::Mu2: return "Mu2";
    case ClassTag::Mu3: return "Mu3";
    case ClassTag::Mu4: return "Mu4";
    case ClassTag::Mu5: return "Mu5";
    case ClassTag::Mu6: return "Mu6";
    case ClassTag::Nilp2Filiform: return "Nilp2_filiform";
    case ClassTag::Nilp2Abelian: return "Nilp2_abelian";
  }
  return "?";
}

std::string to_string(const CharacteristicSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.parts[i]);
  }
  return out + ")";
}

}  // namespace leibniz
