#include "zka/transport.hpp"

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <utility>

namespace zka {

namespace {

void set_timeouts(int fd, std::uint32_t timeout_ms) {
    timeval tv{};
    tv.tv_sec = timeout_ms / 1000;
    tv.tv_usec = static_cast<suseconds_t>(timeout_ms % 1000) * 1000;
    ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
    ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
}

[[noreturn]] void throw_errno(const char* what) {
    int err = errno;
    if (err == EAGAIN || err == EWOULDBLOCK || err == EINPROGRESS || err == ETIMEDOUT) {
        throw Timeout(std::string(what) + " timed out");
    }
    throw TransportClosed(std::string(what) + ": " + std::strerror(err));
}

}  // namespace

TcpStream::TcpStream(int fd, std::uint32_t timeout_ms) : fd_(fd) {
    set_timeouts(fd_, timeout_ms);
    int one = 1;
    ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

TcpStream::~TcpStream() { close(); }

TcpStream::TcpStream(TcpStream&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}

TcpStream& TcpStream::operator=(TcpStream&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
}

void TcpStream::read_exact(std::uint8_t* dst, std::size_t n) {
    std::size_t got = 0;
    while (got < n) {
        ssize_t r = ::recv(fd_, dst + got, n - got, 0);
        if (r == 0) throw TransportClosed("peer closed the connection");
        if (r < 0) {
            if (errno == EINTR) continue;
            throw_errno("recv");
        }
        got += static_cast<std::size_t>(r);
    }
}

void TcpStream::write_all(const std::uint8_t* src, std::size_t n) {
    std::size_t sent = 0;
    while (sent < n) {
        ssize_t r = ::send(fd_, src + sent, n - sent, MSG_NOSIGNAL);
        if (r < 0) {
            if (errno == EINTR) continue;
            if (errno == EPIPE) throw TransportClosed("peer closed the connection");
            throw_errno("send");
        }
        sent += static_cast<std::size_t>(r);
    }
}

void TcpStream::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

TcpListener::TcpListener(std::uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) throw_errno("socket");
    int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) {
        int err = errno;
        ::close(fd_);
        fd_ = -1;
        errno = err;
        throw_errno("bind");
    }
    if (::listen(fd_, 16) < 0) {
        int err = errno;
        ::close(fd_);
        fd_ = -1;
        errno = err;
        throw_errno("listen");
    }
    socklen_t len = sizeof(addr);
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() { close(); }

TcpStream TcpListener::accept(std::uint32_t timeout_ms) {
    set_timeouts(fd_, timeout_ms);
    int client = ::accept(fd_, nullptr, nullptr);
    if (client < 0) throw_errno("accept");
    return TcpStream(client, timeout_ms);
}

void TcpListener::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

TcpStream connect_tcp(const std::string& host, std::uint16_t port, std::uint32_t timeout_ms) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* result = nullptr;
    int rc = ::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &result);
    if (rc != 0) throw TransportClosed(std::string("resolve ") + host + ": " + gai_strerror(rc));
    int fd = -1;
    int saved_errno = 0;
    for (addrinfo* ai = result; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            saved_errno = errno;
            continue;
        }
        set_timeouts(fd, timeout_ms);
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        saved_errno = errno;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(result);
    if (fd < 0) {
        errno = saved_errno;
        throw_errno("connect");
    }
    return TcpStream(fd, timeout_ms);
}

}  // namespace zka
