#include <httplib.h>

#include "tilepump/io/api.hpp"

namespace tilepump::io {

bool run_server(const std::string& host, int port, const ApiConfig& config)
{
    const ApiService service(config);
    httplib::Server server;
    server.set_payload_max_length(config.max_body);
    auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
        std::map<std::string, std::string> query;
        for (const auto& [k, v] : req.params)
            query.emplace(k, v);
        const ApiResponse r = service.handle(req.method, req.path, query, req.body);
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    server.Get(R"(/api/v1/.*)", forward);
    server.Post(R"(/api/v1/.*)", forward);
    return server.listen(host, port);
}

}  // namespace tilepump::io
