#pragma once

#include <json.hpp>

#include "ersurf/classify.hpp"
#include "ersurf/errors.hpp"
#include "ersurf/linsys.hpp"

namespace ersurf {

nlohmann::json to_json(const GroupElement& g);
nlohmann::json to_json(const DivisorClass& c);
nlohmann::json to_json(const SurfaceModel& s);
/// The nine analysis fields; absent optionals serialize as null.
nlohmann::json to_json(const SystemAnalysis& a);
nlohmann::json to_json(const ElmResult& r);
nlohmann::json to_json(const Trajectory& t);
nlohmann::json to_json(const UnisecantFamily& f);
nlohmann::json to_json(const ScrollModel& m);
nlohmann::json to_json(const NagataPlan& p);
nlohmann::json to_json(const StepTemplate& t);
/// {"error": <code name>, "message": ...}
nlohmann::json error_json(const Error& e);

}  // namespace ersurf
