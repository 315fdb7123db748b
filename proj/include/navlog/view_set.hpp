#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace navlog
{

// Dense index with a tag so that views, instructions and states cannot be mixed up.
template < typename Tag >
struct dense_id
{
    std::uint32_t index = 0;

    constexpr dense_id() = default;
    constexpr explicit dense_id( std::size_t i ) : index{ static_cast< std::uint32_t >( i ) } {}

    friend constexpr auto operator<=>( dense_id, dense_id ) = default;
};

struct view_tag {};
struct instruction_tag {};
struct state_tag {};

using view_id = dense_id< view_tag >;
using instruction_id = dense_id< instruction_tag >;
using state_id = dense_id< state_tag >;

inline constexpr std::size_t max_views = 64;

// Set of views as a fixed-width bit vector. Bit k is view with index k.
class view_set
{
    std::uint64_t _bits = 0;

public:
    constexpr view_set() = default;
    constexpr explicit view_set( std::uint64_t bits ) : _bits{ bits } {}

    static constexpr view_set full( std::size_t universe_size )
    {
        return view_set{ universe_size >= 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << universe_size ) - 1 };
    }

    static constexpr view_set single( view_id v ) { return view_set{ std::uint64_t{ 1 } << v.index }; }

    [[nodiscard]] constexpr std::uint64_t bits() const { return _bits; }
    [[nodiscard]] constexpr bool empty() const { return _bits == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast< std::size_t >( std::popcount( _bits ) ); }
    [[nodiscard]] constexpr bool contains( view_id v ) const { return ( _bits >> v.index ) & 1U; }
    [[nodiscard]] constexpr bool subset_of( view_set other ) const { return ( _bits & ~other._bits ) == 0; }
    [[nodiscard]] constexpr bool disjoint( view_set other ) const { return ( _bits & other._bits ) == 0; }

    constexpr void insert( view_id v ) { _bits |= std::uint64_t{ 1 } << v.index; }
    constexpr void erase( view_id v ) { _bits &= ~( std::uint64_t{ 1 } << v.index ); }

    friend constexpr view_set operator|( view_set a, view_set b ) { return view_set{ a._bits | b._bits }; }
    friend constexpr view_set operator&( view_set a, view_set b ) { return view_set{ a._bits & b._bits }; }
    // Set difference.
    friend constexpr view_set operator-( view_set a, view_set b ) { return view_set{ a._bits & ~b._bits }; }

    friend constexpr auto operator<=>( view_set, view_set ) = default;

    template < typename F >
    void for_each( F&& f ) const
    {
        for ( auto rest = _bits; rest != 0; rest &= rest - 1 )
            f( view_id{ static_cast< std::size_t >( std::countr_zero( rest ) ) } );
    }

    [[nodiscard]] std::vector< view_id > members() const
    {
        std::vector< view_id > out;
        for_each( [ & ]( view_id v ) { out.push_back( v ); } );
        return out;
    }
};

// Calls f on every subset of `of`, including the empty set and `of` itself.
template < typename F >
void for_each_subset( view_set of, F&& f )
{
    const auto mask = of.bits();
    std::uint64_t sub = 0;
    do
    {
        f( view_set{ sub } );
        sub = ( sub - mask ) & mask;
    } while ( sub != 0 );
}

} // namespace navlog

template < typename Tag >
struct std::hash< navlog::dense_id< Tag > >
{
    std::size_t operator()( navlog::dense_id< Tag > id ) const noexcept { return id.index; }
};
