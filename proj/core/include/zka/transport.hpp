#pragma once

#include <cstdint>
#include <string>

#include "zka/wire.hpp"

namespace zka {

/// Connected TCP socket as a ByteStream. Reads and writes honor the timeout
/// set at construction; a closed peer surfaces as TransportClosed, an expired
/// timer as Timeout.
class TcpStream final : public ByteStream {
public:
    /// Takes ownership of a connected socket descriptor.
    TcpStream(int fd, std::uint32_t timeout_ms);
    ~TcpStream() override;

    TcpStream(TcpStream&& other) noexcept;
    TcpStream& operator=(TcpStream&& other) noexcept;
    TcpStream(const TcpStream&) = delete;
    TcpStream& operator=(const TcpStream&) = delete;

    void read_exact(std::uint8_t* dst, std::size_t n) override;
    void write_all(const std::uint8_t* src, std::size_t n) override;
    void close() override;

private:
    int fd_ = -1;
};

class TcpListener {
public:
    /// Binds 0.0.0.0:port; port 0 picks an ephemeral port, readable via port().
    explicit TcpListener(std::uint16_t port);
    ~TcpListener();

    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    std::uint16_t port() const { return port_; }
    TcpStream accept(std::uint32_t timeout_ms);
    void close();

private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

TcpStream connect_tcp(const std::string& host, std::uint16_t port, std::uint32_t timeout_ms);

}  // namespace zka
